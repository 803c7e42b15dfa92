#include "commgroup/basis.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace commgroup {

void validate_symbol(const TSymbol& s, int rank) {
  if (s.i < 1 || s.j <= s.i || s.j > rank || s.rank() != rank) {
    throw Error(ErrorCode::InvalidSymbol,
                to_string(s) + " is not a valid symbol over rank " + std::to_string(rank));
  }
}

void BasisWord::push(const TSymbol& s, int sign) {
  if (!letters_.empty() && letters_.back().sign == -sign && letters_.back().symbol == s) {
    letters_.pop_back();
    return;
  }
  letters_.push_back({s, sign});
}

void BasisWord::append(const BasisWord& other) {
  for (const auto& l : other.letters_) push(l);
}

BasisWord inverse(const BasisWord& w) {
  BasisWord out;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push(it->symbol, -it->sign);
  return out;
}

BasisWord sandwich(const BasisWord& w, const TSymbol& s) {
  BasisWord out = inverse(w);
  out.push(s, 1);
  out.append(w);
  return out;
}

Word expand_symbol(const TSymbol& s) {
  const int n = s.rank();
  validate_symbol(s, n);
  Word u(n);
  for (std::size_t t = 0; t < s.k.size(); ++t) {
    u.append(s.i + static_cast<int>(t), s.k[t]);
  }
  return conjugate(commutator(Word::generator(n, s.i), Word::generator(n, s.j)), u);
}

Word expand(const BasisWord& bw, int rank) {
  Word out(rank);
  for (const auto& l : bw.letters()) {
    if (l.symbol.rank() != rank) {
      throw Error(ErrorCode::Alphabet, "symbol " + to_string(l.symbol) +
                                           " does not live over rank " +
                                           std::to_string(rank));
    }
    const Word e = expand_symbol(l.symbol);
    out.append(l.sign > 0 ? e : invert(e));
  }
  return out;
}

std::vector<TSymbol> free_basis_enumerate(int n, Exponent bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "bound must be >= 0");
  std::vector<TSymbol> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for_each_box_point(static_cast<std::size_t>(n - i + 1), bound,
                      [&](const std::vector<Exponent>& k) { out.push_back({i, j, k}); });
    }
  }
  return out;
}

std::vector<TSymbol> surface_basis_enumerate(int genus, Exponent bound) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be >= 1");
  std::vector<TSymbol> out;
  for (auto& s : free_basis_enumerate(2 * genus, bound)) {
    if (!(s.i == 1 && s.j == 2)) out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const TSymbol& s) {
  std::ostringstream os;
  os << "C[" << s.i << ',' << s.j << "](";
  for (std::size_t t = 0; t < s.k.size(); ++t) {
    if (t) os << ',';
    os << s.k[t];
  }
  os << ')';
  return os.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  template <typename T>
  T integer() {
    skip_space();
    T value{};
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in \"" +
                                      std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TSymbol parse_symbol(std::string_view text) {
  Cursor c(text);
  c.expect('C');
  c.expect('[');
  TSymbol s;
  s.i = c.integer<int>();
  c.expect(',');
  s.j = c.integer<int>();
  c.expect(']');
  c.expect('(');
  c.skip_space();
  if (c.peek() != ')') {
    s.k.push_back(c.integer<Exponent>());
    c.skip_space();
    while (c.peek() == ',') {
      c.expect(',');
      s.k.push_back(c.integer<Exponent>());
      c.skip_space();
    }
  }
  c.expect(')');
  c.skip_space();
  if (!c.at_end()) c.fail("trailing characters");
  if (s.k.empty()) {
    throw Error(ErrorCode::InvalidSymbol, "symbol needs at least one exponent");
  }
  validate_symbol(s, s.rank());
  return s;
}

std::string to_string(const BasisWord& bw) {
  std::string out;
  for (const auto& l : bw.letters()) {
    out += l.sign > 0 ? "+ " : "- ";
    out += to_string(l.symbol);
    out += '\n';
  }
  return out;
}

BasisWord parse_basis_word(std::string_view text) {
  BasisWord out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p < line.size()) {
      int sign = 1;
      if (line[p] == '+' || line[p] == '-') {
        sign = line[p] == '-' ? -1 : 1;
        ++p;
      }
      out.push(parse_symbol(line.substr(p)), sign);
    }
    start = end + 1;
  }
  return out;
}

}  // namespace commgroup
