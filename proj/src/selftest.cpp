#include "commgroup/selftest.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "commgroup/free_rewriter.hpp"
#include "commgroup/homology.hpp"
#include "commgroup/module.hpp"
#include "commgroup/random.hpp"
#include "commgroup/surface_rewriter.hpp"

namespace commgroup {

namespace {

constexpr std::size_t kMaxFailures = 5;

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  // Runs one case; exceptions count as failures.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    ++result_.total;
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    if (ok) {
      ++result_.passed;
    } else if (result_.failures.size() < kMaxFailures) {
      result_.failures.push_back(describe() + detail);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult free_round_trip(const SelftestConfig& cfg) {
  Suite s("free round trip");
  Rng rng = make_stream(cfg.seed, "free-round-trip");
  FreeRewriter rewriter;
  for (int c = 0; c < cfg.cases; ++c) {
    const int n = 2 + c % 4;
    const Word w = random_commutator_word(rng, n, 40);
    s.run([&] { return expand(rewriter.rewrite(w), n) == w; },
          [&] { return "n=" + std::to_string(n) + " w=\"" + to_string(w) + "\""; });
  }
  return s.take();
}

SuiteResult free_basis_freeness(const SelftestConfig& cfg) {
  Suite s("free basis freeness");
  Rng rng = make_stream(cfg.seed, "free-basis-freeness");
  FreeRewriter rewriter;
  for (int c = 0; c < cfg.cases; ++c) {
    const int n = 2 + c % 3;
    const BasisWord bw = random_basis_word(rng, n, 8, cfg.box);
    s.run([&] { return rewriter.rewrite(expand(bw, n)) == bw; },
          [&] { return "n=" + std::to_string(n) + " basis word of " + std::to_string(bw.size()); });
  }
  return s.take();
}

SuiteResult surface_round_trip(const SelftestConfig& cfg) {
  Suite s("surface round trip");
  Rng rng = make_stream(cfg.seed, "surface-round-trip");
  for (int g = 2; g <= 3; ++g) {
    SurfaceRewriter rewriter(g);
    for (int c = 0; c < (cfg.cases + 1) / 2; ++c) {
      const Word w = random_commutator_word(rng, 2 * g, 30);
      s.run(
          [&] {
            const BasisWord bw = rewriter.rewrite(w);
            for (const auto& l : bw.letters()) {
              if (l.symbol.i == 1 && l.symbol.j == 2) return false;
            }
            return surface_equal(rewriter.presentation(), expand(bw, 2 * g), w);
          },
          [&] { return "g=" + std::to_string(g) + " w=\"" + to_string(w) + "\""; });
    }
  }
  return s.take();
}

SuiteResult dehn_soundness(const SelftestConfig& cfg) {
  Suite s("Dehn soundness");
  Rng rng = make_stream(cfg.seed, "dehn-soundness");
  for (int g = 2; g <= 3; ++g) {
    const SurfacePresentation p(g);
    for (int c = 0; c < (cfg.cases + 1) / 2; ++c) {
      Word w(p.rank());
      const auto factors = uniform(rng, 1, 5);
      for (std::int64_t f = 0; f < factors; ++f) {
        const Word u = random_word(rng, p.rank(), static_cast<std::size_t>(uniform(rng, 0, 6)));
        const Word r = uniform(rng, 0, 1) ? p.relator() : invert(p.relator());
        w.append(conjugate(r, u));
      }
      s.run([&] { return is_trivial(p, w); },
            [&] { return "g=" + std::to_string(g) + " relator product \"" + to_string(w) + "\""; });

      Word v = random_word(rng, p.rank(), static_cast<std::size_t>(uniform(rng, 1, 20)));
      if (v.empty()) v = Word::generator(p.rank(), 1);
      const AbelianVector ab = abelianize_vector(v);
      if (std::all_of(ab.begin(), ab.end(), [](Exponent e) { return e == 0; })) {
        v.append(Word::generator(p.rank(), static_cast<int>(uniform(rng, 1, p.rank()))));
      }
      s.run([&] { return !is_trivial(p, v); },
            [&] { return "g=" + std::to_string(g) + " nonzero abelianization \"" + to_string(v) + "\""; });
    }
  }
  return s.take();
}

SuiteResult rank_two_freeness(const SelftestConfig& cfg) {
  Suite s("rank-2 freeness");
  ModuleElement base(2, ModuleCase::Free);
  base.add_term(TSymbol{1, 2, {0, 0}}, 1);
  for_each_box_point(2, cfg.box, [&](const std::vector<Exponent>& h) {
    s.run(
        [&] {
          ModuleElement expect(2, ModuleCase::Free);
          expect.add_term(TSymbol{1, 2, h}, 1);
          return act(LaurentPoly::monomial(2, h), base) == expect;
        },
        [&] { return "h=(" + std::to_string(h[0]) + "," + std::to_string(h[1]) + ")"; });
  });
  return s.take();
}

SuiteResult well_definedness(const SelftestConfig& cfg) {
  Suite s("braces well-definedness");
  Rng rng = make_stream(cfg.seed, "well-definedness");
  for (int c = 0; c < cfg.cases; ++c) {
    const int n = 2 + c % 3;
    const Word base = random_commutator_word(rng, n, 12);
    const Word w = random_word(rng, n, static_cast<std::size_t>(uniform(rng, 0, 8)));
    const Word d = random_commutator_word(rng, n, 12);
    s.run([&] {
            return abelianize_free(conjugate(base, w)) == abelianize_free(conjugate(base, multiply(w, d)));
          },
          [&] { return "c=\"" + to_string(base) + "\" w=\"" + to_string(w) + "\" d=\"" + to_string(d) + "\""; });
  }
  return s.take();
}

SuiteResult koszul_relations(const SelftestConfig& cfg) {
  Suite s("Koszul relations");
  Rng rng = make_stream(cfg.seed, "koszul-relations");
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int c = 0; c < std::max(1, cfg.cases / 10); ++c) {
            const auto h = random_vector(rng, static_cast<std::size_t>(n), cfg.box);
            s.run([&] { return koszul_relation_check(n, i, j, k, h).is_zero(); },
                  [&] {
                    return "n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")";
                  });
          }
        }
      }
    }
  }
  return s.take();
}

SuiteResult fox_identity_suite(const SelftestConfig& cfg) {
  Suite s("Fox identity");
  Rng rng = make_stream(cfg.seed, "fox-identity");
  for (int c = 0; c < cfg.cases; ++c) {
    const int n = 2 + c % 4;
    const Word w = random_commutator_word(rng, n, 40);
    s.run(
        [&] {
          if (!fox_identity(fox_vector(w)).is_zero()) return false;
          // The Magnus image only sees the abelianized class.
          return magnus_image(abelianize_free(w)) == fox_vector(w);
        },
        [&] { return "w=\"" + to_string(w) + "\""; });
  }
  return s.take();
}

SuiteResult relator_quotient(const SelftestConfig& cfg) {
  Suite s("relator quotient");
  Rng rng = make_stream(cfg.seed, "relator-quotient");
  for (int g = 1; g <= 2; ++g) {
    const ModuleElement r = relator_class(g);
    s.run([&] { return r == abelianize_free(surface_relator(g)); },
          [&] { return "relator class g=" + std::to_string(g); });
    for (int c = 0; c < std::max(1, cfg.cases / 4); ++c) {
      const auto h = random_vector(rng, static_cast<std::size_t>(2 * g), cfg.box);
      s.run([&] { return surface_quotient(act(LaurentPoly::monomial(2 * g, h), r)).is_zero(); },
            [&] { return "g=" + std::to_string(g) + " shifted relator"; });
    }
  }
  return s.take();
}

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t out = 1;
  for (int t = 1; t <= k; ++t) out = out * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return out;
}

SuiteResult homology_tables(const SelftestConfig&) {
  Suite s("homology tables");
  for (int n = 2; n <= 5; ++n) {
    const ChainComplex c = free_case_complex(n, 4);
    for (int k = 0; k <= 4; ++k) {
      s.run([&] { return homology_at(c, k) == HomologyResult{choose(n, k + 2), {}}; },
            [&] { return "free n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
  for (int g = 1; g <= 3; ++g) {
    const ChainComplex c = surface_case_complex(g, 4);
    for (int k = 0; k <= 4; ++k) {
      const std::size_t expect = k == 0 ? choose(2 * g, 2) - 1 : choose(2 * g, k + 2);
      s.run([&] { return homology_at(c, k) == HomologyResult{expect, {}}; },
            [&] { return "surface g=" + std::to_string(g) + " k=" + std::to_string(k); });
    }
  }
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  if (config.cases < 1) throw Error(ErrorCode::InvalidArgument, "case count must be >= 1");
  if (config.box < 0) throw Error(ErrorCode::InvalidArgument, "box bound must be >= 0");
  return {free_round_trip(config),    free_basis_freeness(config), surface_round_trip(config),
          dehn_soundness(config),     rank_two_freeness(config),   well_definedness(config),
          koszul_relations(config),   fox_identity_suite(config),  relator_quotient(config),
          homology_tables(config)};
}

std::string format_selftest(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const auto& r : results) {
    os << std::left << std::setw(26) << r.name << ' ' << (r.ok() ? "PASS" : "FAIL") << ' '
       << std::right << std::setw(5) << r.passed << '/' << r.total << '\n';
    for (const auto& f : r.failures) os << "    " << f << '\n';
    if (!r.ok()) ++failed;
  }
  os << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << '\n';
  return os.str();
}

}  // namespace commgroup
