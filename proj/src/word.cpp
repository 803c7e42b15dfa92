#include "commgroup/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace commgroup {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Alphabet: return "alphabet-error";
    case ErrorCode::Parse: return "parse-error";
    case ErrorCode::NotInCommutatorSubgroup: return "not-in-commutator-subgroup";
    case ErrorCode::NotInNormalClosure: return "not-in-normal-closure";
    case ErrorCode::NonzeroExponentSum: return "nonzero-exponent-sum";
    case ErrorCode::InvalidSymbol: return "invalid-symbol";
    case ErrorCode::NotInKernel: return "not-in-kernel";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
  }
  return "unknown";
}

void invariant_failure(const char* what, const char* file, int line) {
  throw std::logic_error(std::string("invariant violated: ") + what + " (" + file +
                         ":" + std::to_string(line) + ")");
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "exponent addition overflows 64 bits");
  }
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Overflow, "exponent multiplication overflows 64 bits");
  }
  return r;
}

Exponent checked_neg(Exponent a) { return checked_mul(a, -1); }

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) {
    throw Error(ErrorCode::Alphabet, "rank must be at least 1");
  }
}

Word Word::generator(int rank, int index, Exponent exp) {
  Word w(rank);
  w.append(index, exp);
  return w;
}

Word Word::from_runs(int rank, std::span<const Run> runs) {
  Word w(rank);
  for (const Run& r : runs) w.append(r.index, r.exp);
  return w;
}

Word Word::from_letters(int rank, std::span<const Letter> letters) {
  Word w(rank);
  for (Letter l : letters) w.append(std::abs(l), l > 0 ? 1 : -1);
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Run& r : runs_) n += static_cast<std::size_t>(std::abs(r.exp));
  return n;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const Run& r : runs_) {
    const Letter l = r.exp > 0 ? r.index : -r.index;
    for (Exponent k = 0; k < std::abs(r.exp); ++k) out.push_back(l);
  }
  return out;
}

void Word::append(int index, Exponent exp) {
  if (index < 1 || index > rank_) {
    throw Error(ErrorCode::Alphabet, "generator x" + std::to_string(index) +
                                         " outside rank " + std::to_string(rank_));
  }
  if (exp == 0) return;
  if (!runs_.empty() && runs_.back().index == index) {
    runs_.back().exp = checked_add(runs_.back().exp, exp);
    if (runs_.back().exp == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({index, exp});
}

void Word::append(const Word& other) {
  require_same_rank(*this, other);
  for (const Run& r : other.runs_) append(r.index, r.exp);
}

void require_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw Error(ErrorCode::Alphabet, "alphabet mismatch: rank " +
                                         std::to_string(u.rank()) + " vs " +
                                         std::to_string(v.rank()));
  }
}

Word reduce(int rank, std::span<const Letter> raw) {
  return Word::from_letters(rank, raw);
}

Word multiply(const Word& u, const Word& v) {
  Word out = u;
  out.append(v);
  return out;
}

Word invert(const Word& u) {
  Word out(u.rank());
  const auto& runs = u.runs();
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    out.append(it->index, checked_neg(it->exp));
  }
  return out;
}

Word power(const Word& u, Exponent e) {
  if (e == INT64_MIN) throw Error(ErrorCode::Overflow, "exponent out of range");
  Word base = e >= 0 ? u : invert(u);
  Word out(u.rank());
  // Square and multiply; a single-run base stays a single run.
  for (Exponent k = std::abs(e); k > 0; k >>= 1) {
    if (k & 1) out.append(base);
    if (k > 1) base = multiply(base, base);
  }
  return out;
}

Word conjugate(const Word& x, const Word& y) {
  require_same_rank(x, y);
  Word out = invert(y);
  out.append(x);
  out.append(y);
  return out;
}

Word commutator(const Word& x, const Word& y) {
  require_same_rank(x, y);
  Word out = invert(x);
  out.append(invert(y));
  out.append(x);
  out.append(y);
  return out;
}

AbelianVector abelianize_vector(const Word& w) {
  AbelianVector v(static_cast<std::size_t>(w.rank()), 0);
  for (const Run& r : w.runs()) {
    auto& slot = v[static_cast<std::size_t>(r.index - 1)];
    slot = checked_add(slot, r.exp);
  }
  return v;
}

Word retract_delete(const Word& w, const std::set<int>& drop) {
  Word out(w.rank());
  for (const Run& r : w.runs()) {
    if (!drop.contains(r.index)) out.append(r.index, r.exp);
  }
  return out;
}

Word sorted_word(int rank, std::span<const Exponent> v, int first) {
  Word out(rank);
  for (int i = first; i <= rank; ++i) {
    out.append(i, v[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

Word embed(const Word& w, int new_rank, int offset) {
  Word out(new_rank);
  for (const Run& r : w.runs()) out.append(r.index + offset, r.exp);
  return out;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Run& r : w.runs()) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << r.index;
    if (r.exp != 1) os << '^' << r.exp;
  }
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos,
                             const std::string& what) {
  throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos) +
                                    " in \"" + std::string(text) + "\"");
}

template <typename T>
std::size_t parse_int(std::string_view text, std::size_t pos, T& value) {
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) parse_fail(text, pos, "expected integer");
  return pos + static_cast<std::size_t>(ptr - begin);
}

}  // namespace

Word parse_word(int rank, std::string_view text) {
  Word out(rank);
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == text.size()) break;
    if (text[pos] != 'x') parse_fail(text, pos, "expected 'x'");
    ++pos;
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      parse_fail(text, pos, "expected generator index");
    }
    int index = 0;
    pos = parse_int(text, pos, index);
    Exponent exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      // from_chars takes '-' but not '+'.
      if (pos + 1 < text.size() && text[pos] == '+' && text[pos + 1] != '-') ++pos;
      pos = parse_int(text, pos, exp);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      parse_fail(text, pos, "tokens must be whitespace-separated");
    }
    if (index < 1 || index > rank) {
      throw Error(ErrorCode::Alphabet, "generator x" + std::to_string(index) +
                                           " outside rank " + std::to_string(rank));
    }
    if (exp == 0) parse_fail(text, pos, "zero exponent");
    out.append(index, exp);
  }
  return out;
}

void for_each_box_point(std::size_t len, Exponent bound,
                        const std::function<void(const std::vector<Exponent>&)>& fn) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be >= 0");
  std::vector<Exponent> v(len, -bound);
  while (true) {
    fn(v);
    std::size_t t = len;
    while (t > 0 && v[t - 1] == bound) v[--t] = -bound;
    if (t == 0) return;
    ++v[t - 1];
  }
}

}  // namespace commgroup
