// commgroup: command-line front end.
//
// Exit status: 0 on success, 1 on usage errors, 2 on domain errors (printed
// to stderr as `error: <code>: <detail>`), 3 when selftest finds a failure or
// an internal invariant breaks.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "commgroup/basis.hpp"
#include "commgroup/free_rewriter.hpp"
#include "commgroup/homology.hpp"
#include "commgroup/json_io.hpp"
#include "commgroup/module.hpp"
#include "commgroup/selftest.hpp"
#include "commgroup/surface.hpp"
#include "commgroup/surface_rewriter.hpp"

namespace cg = commgroup;
using nlohmann::json;

namespace {

struct Config {
  std::uint64_t seed = 1;
  cg::Exponent box = 3;
  int cases = 100;
  std::string format = "text";
};

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw cg::Error(cg::ErrorCode::Parse, std::string("bad JSON: ") + e.what());
  }
}

std::vector<cg::Exponent> parse_vector(const std::string& text, int n) {
  std::vector<cg::Exponent> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw cg::Error(cg::ErrorCode::Parse, "bad exponent \"" + item + "\"");
    }
  }
  if (text.empty()) out.assign(static_cast<std::size_t>(n), 0);
  if (static_cast<int>(out.size()) != n) {
    throw cg::Error(cg::ErrorCode::InvalidArgument,
                    "expected " + std::to_string(n) + " comma-separated exponents");
  }
  return out;
}

void print_module(const cg::ModuleElement& m, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << cg::to_json(m).dump() << '\n';
  } else {
    std::cout << cg::to_string(m) << '\n';
  }
}

void print_basis_word(const cg::BasisWord& bw, int rank, const Config& cfg) {
  if (cfg.format == "json") {
    json letters = json::array();
    for (const auto& l : bw.letters()) {
      letters.push_back({{"i", l.symbol.i}, {"j", l.symbol.j}, {"k", l.symbol.k}, {"sign", l.sign}});
    }
    std::cout << json{{"rank", rank}, {"letters", letters}}.dump() << '\n';
  } else {
    std::cout << cg::to_string(bw);
  }
}

void print_homology(const cg::HomologyResult& h, const Config& cfg) {
  if (cfg.format == "json") {
    std::cout << cg::to_json(h).dump() << '\n';
    return;
  }
  std::string text = h.betti == 0 ? "" : "Z^" + std::to_string(h.betti);
  for (const auto& t : h.torsion) text += (text.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  std::cout << (text.empty() ? "0" : text) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutator subgroups of free and surface groups: rewriting, modules, homology"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--seed", cfg.seed, "Random seed for selftest")->capture_default_str();
  app.add_option("--box", cfg.box, "Truncation box bound")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--cases", cfg.cases, "Cases per selftest suite")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  int rank = 0;
  int genus = 0;
  std::string word;
  std::string text_a;
  std::string text_b;
  std::string shift;
  int sym_i = 0;
  int sym_j = 0;
  int degree = 0;

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Rewrite an element of [F_n,F_n] in the basis");
  rewrite_cmd->add_option("-n,--rank", rank, "Rank of the free group")->required()->check(CLI::PositiveNumber);
  rewrite_cmd->add_option("word", word, "Word, e.g. \"x1^-1 x2^-1 x1 x2\"")->required();

  auto* rewrite_surface_cmd =
      app.add_subcommand("rewrite-surface", "Rewrite an element of [pi,pi] for the genus-g surface group");
  rewrite_surface_cmd->add_option("-g,--genus", genus, "Genus")->required()->check(CLI::PositiveNumber);
  rewrite_surface_cmd->add_option("word", word, "Word")->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand symbol lines (from stdin or argument) to a word");
  expand_cmd->add_option("-n,--rank", rank, "Rank")->required()->check(CLI::PositiveNumber);
  expand_cmd->add_option("symbols", text_a, "Symbol lines; read from stdin when omitted");

  auto* trivial_cmd = app.add_subcommand("is-trivial", "Decide whether a word is trivial in the surface group");
  trivial_cmd->add_option("-g,--genus", genus, "Genus")->required()->check(CLI::PositiveNumber);
  trivial_cmd->add_option("word", word, "Word")->required();

  auto* abelianize_cmd = app.add_subcommand("abelianize", "Class of a commutator-subgroup element");
  auto* ab_rank = abelianize_cmd->add_option("-n,--rank", rank, "Rank (free case)")->check(CLI::PositiveNumber);
  auto* ab_genus = abelianize_cmd->add_option("-g,--genus", genus, "Genus (surface case)")->check(CLI::PositiveNumber);
  ab_rank->excludes(ab_genus);
  abelianize_cmd->add_option("word", word, "Word")->required();

  auto* act_cmd = app.add_subcommand("act", "Apply a Laurent polynomial to a module element");
  act_cmd->add_option("poly", text_a, "LaurentPoly JSON")->required();
  act_cmd->add_option("element", text_b, "ModuleElement JSON; read from stdin when omitted");

  auto* braces_cmd = app.add_subcommand("braces", "Class of [x_i,x_j]^{x1^h1...xn^hn}");
  braces_cmd->add_option("-n,--rank", rank, "Rank")->required()->check(CLI::PositiveNumber);
  braces_cmd->add_option("-i", sym_i, "First index")->required();
  braces_cmd->add_option("-j", sym_j, "Second index")->required();
  braces_cmd->add_option("--shift", shift, "Comma-separated h, default zero");

  auto* quotient_cmd =
      app.add_subcommand("quotient-surface", "Map a free-case element of rank 2g to the surface module");
  quotient_cmd->add_option("element", text_a, "ModuleElement JSON; read from stdin when omitted");

  auto* homology_cmd = app.add_subcommand("homology", "Homology of Z^n with coefficients in the commutator module");
  homology_cmd->require_subcommand(1);
  auto* homology_free = homology_cmd->add_subcommand("free", "Free group case");
  homology_free->add_option("-n,--rank", rank, "Rank")->required()->check(CLI::Range(2, 64));
  homology_free->add_option("-k,--degree", degree, "Homological degree")->required()->check(CLI::NonNegativeNumber);
  auto* homology_surface = homology_cmd->add_subcommand("surface", "Surface group case");
  homology_surface->add_option("-g,--genus", genus, "Genus")->required()->check(CLI::Range(1, 32));
  homology_surface->add_option("-k,--degree", degree, "Homological degree")->required()->check(CLI::NonNegativeNumber);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the seeded invariant suites");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  homology_free->fallthrough();
  homology_surface->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*rewrite_cmd) {
      const cg::Word w = cg::parse_word(rank, word);
      print_basis_word(cg::rewrite(w), rank, cfg);
    } else if (*rewrite_surface_cmd) {
      const cg::SurfacePresentation p(genus);
      const cg::Word w = cg::parse_word(p.rank(), word);
      print_basis_word(cg::rewrite_surface(p, w), p.rank(), cfg);
    } else if (*expand_cmd) {
      const std::string text = expand_cmd->count("symbols") ? text_a : read_stdin();
      std::cout << cg::to_string(cg::expand(cg::parse_basis_word(text), rank)) << '\n';
    } else if (*trivial_cmd) {
      const cg::SurfacePresentation p(genus);
      const bool trivial = cg::is_trivial(p, cg::parse_word(p.rank(), word));
      if (cfg.format == "json") {
        std::cout << json{{"trivial", trivial}}.dump() << '\n';
      } else {
        std::cout << (trivial ? "true" : "false") << '\n';
      }
    } else if (*abelianize_cmd) {
      if (genus > 0) {
        const cg::SurfacePresentation p(genus);
        print_module(cg::abelianize_surface(p, cg::parse_word(p.rank(), word)), cfg);
      } else if (rank > 0) {
        print_module(cg::abelianize_free(cg::parse_word(rank, word)), cfg);
      } else {
        throw CLI::RequiredError("--rank or --genus");
      }
    } else if (*act_cmd) {
      const cg::LaurentPoly p = cg::laurent_from_json(parse_json(text_a));
      const std::string element = act_cmd->count("element") ? text_b : read_stdin();
      print_module(cg::act(p, cg::module_from_json(parse_json(element))), cfg);
    } else if (*braces_cmd) {
      print_module(cg::braces(rank, sym_i, sym_j, parse_vector(shift, rank)), cfg);
    } else if (*quotient_cmd) {
      const std::string element = quotient_cmd->count("element") ? text_a : read_stdin();
      print_module(cg::surface_quotient(cg::module_from_json(parse_json(element))), cfg);
    } else if (*homology_free) {
      print_homology(cg::homology_at(cg::free_case_complex(rank, degree), degree), cfg);
    } else if (*homology_surface) {
      print_homology(cg::homology_at(cg::surface_case_complex(genus, degree), degree), cfg);
    } else if (*selftest_cmd) {
      const auto results = cg::run_selftest({cfg.seed, cfg.cases, cfg.box});
      std::cout << cg::format_selftest(results);
      for (const auto& r : results) {
        if (!r.ok()) return 3;
      }
    }
  } catch (const cg::Error& e) {
    std::cerr << "error: " << cg::error_code_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
