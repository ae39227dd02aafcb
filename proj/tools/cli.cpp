#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "framed/circuits.hpp"
#include "framed/graphs.hpp"
#include "framed/symmat.hpp"
#include "framed/verify.hpp"
#include "framed/words.hpp"

namespace framed::cli {

int exit_code(Errc code) noexcept {
  switch (code) {
    case Errc::Syntax:
    case Errc::Format:
    case Errc::LetterCount:
    case Errc::MarkMismatch:
      return kParseError;
    case Errc::TooLarge:
      return kTooLarge;
    default:
      return kPrecondition;
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Format, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string names_of(const FramedWord& w, const std::vector<std::size_t>& letters) {
  std::string s;
  for (std::size_t l : letters) s += (s.empty() ? "" : " ") + w.alphabet()[l];
  return s;
}

std::size_t one_based(const SymMatrix& a, long k) {
  if (k < 1 || static_cast<std::size_t>(k) > a.size())
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(k) + " not in 1.." + std::to_string(a.size()));
  return static_cast<std::size_t>(k - 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss circuits, rotating circuits and local complementation over GF(2)", "framed4"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string alphabet;
  app.add_option("--alphabet", alphabet,
                 "comma-separated letter order for matrix rows (default: first occurrence)");

  std::string word_arg, file_arg, letter_a, letter_b, suite = "all", mode = "any";
  long index_i = 0, index_j = 0;
  std::size_t bound = 0, count = 0;
  std::uint64_t seed = 0;
  bool json = false;

  auto word_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("word", word_arg, "framed word, or @file")->required();
    return sub;
  };
  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file_arg, "matrix file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* c_parse = word_cmd("parse", "canonical form and framings");
  auto* c_adj = word_cmd("adj", "framed adjacency matrix");
  auto* c_exists = word_cmd("gauss-exists", "does the graph have a Gauss circuit");
  auto* c_gauss = word_cmd("gauss", "Gauss circuit by matrix inversion, checked by traversal");
  auto* c_rot = word_cmd("rotating", "a rotating word of the same graph");
  auto* c_star = word_cmd("star", "framed star at a letter");
  c_star->add_option("letter", letter_a)->required();
  auto* c_pw = word_cmd("pivot-word", "((w*a)*b)*a");
  c_pw->add_option("a", letter_a)->required();
  c_pw->add_option("b", letter_b)->required();
  auto* c_surg = word_cmd("surgery", "component count by simulation and by corank");
  auto* c_dd = word_cmd("ddiagram", "d-diagram test");
  auto* c_tours = word_cmd("tours", "words of all Euler tours of the graph");
  c_tours->add_option("--max-vertices", bound, "enumeration bound")->default_val(default_tour_bound);
  auto* c_dot = word_cmd("export-dot", "interlacement graph as DOT (or chord endpoints as JSON)");
  c_dot->add_flag("--json", json, "emit JSON instead of DOT");

  bool plus_identity = false;
  auto* c_inv = file_cmd("inverse", "GF(2) inverse of a square matrix");
  c_inv->add_flag("--plus-identity", plus_identity, "invert A + E instead of A");
  auto* c_chi = file_cmd("chi", "class of (A+E)^-1 up to diagonal");
  auto* c_chiinv = file_cmd("chi-inv", "inverse of chi");
  c_chiinv->add_option("--bound", bound, "orbit bound")->default_val(default_orbit_bound);
  auto* c_loc = file_cmd("loc", "local complementation at k (1-based)");
  c_loc->add_option("k", index_i)->required();
  auto* c_piv = file_cmd("pivot", "pivot at i j (1-based)");
  c_piv->add_option("i", index_i)->required();
  c_piv->add_option("j", index_j)->required();
  auto* c_orbit = file_cmd("orbit", "orbit under loc and pivot");
  c_orbit->add_option("--bound", bound, "size bound")->default_val(default_orbit_bound);
  auto* c_real = file_cmd("realize", "search for a chord diagram with the given adjacency");
  c_real->add_option("--max-n", bound, "size bound")->default_val(default_realize_bound);

  auto* c_rand = app.add_subcommand("random", "random framed word");
  c_rand->add_option("--n", count, "number of letters")->required();
  c_rand->add_option("--seed", seed, "seed")->default_val(0);
  c_rand->add_option("--mode", mode, "any | gaussian_only | rotating_only")
      ->default_val("any")
      ->check(CLI::IsMember({"any", "gaussian_only", "rotating_only"}));

  auto* c_verify = app.add_subcommand("verify", "run acceptance suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.insert(suite_choices.begin(), "all");
  c_verify->add_option("--suite", suite, "suite name or 'all'")
      ->default_val("all")
      ->check(CLI::IsMember(suite_choices));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  try {
    auto word = [&] {
      FramedWord w = parse_word(word_arg.starts_with('@') ? read_file(word_arg.substr(1)) : word_arg);
      return alphabet.empty() ? w : with_alphabet(w, split_commas(alphabet));
    };
    auto sym = [&] { return parse_sym_matrix(read_file(file_arg)); };

    if (c_parse->parsed()) {
      const FramedWord w = word();
      out << "word: " << to_text(w) << '\n' << "canonical: " << to_text(canonical(w)) << '\n';
      out << "letter framing\n";
      for (std::size_t l = 0; l < w.letter_count(); ++l)
        out << w.alphabet()[l] << ' ' << framing_symbol(w.framing(l)) << '\n';
    } else if (c_adj->parsed()) {
      out << to_text(adjacency(word()));
    } else if (c_exists->parsed()) {
      const FramedWord w = word();
      const std::size_t k = gauss_corank(w);
      out << "gauss-circuit: " << (k == 0 ? "yes" : "no") << '\n' << "corank: " << k << '\n';
    } else if (c_gauss->parsed()) {
      const GaussResult g = gauss_word(word());
      out << "matrix:\n" << to_text(g.matrix) << "word: " << to_text(g.word) << '\n'
          << "consistency: " << (g.consistent ? "OK" : "MISMATCH") << '\n';
    } else if (c_rot->parsed()) {
      out << to_text(to_rotating(word())) << '\n';
    } else if (c_star->parsed()) {
      const FramedWord w = word();
      out << to_text(framed_star(w, w.letter_index(letter_a))) << '\n';
    } else if (c_pw->parsed()) {
      const FramedWord w = word();
      out << to_text(star_pivot(w, w.letter_index(letter_a), w.letter_index(letter_b))) << '\n';
    } else if (c_surg->parsed()) {
      const FramedWord w = word();
      out << "simulation: " << surgery_components(w) << '\n'
          << "corank+1: " << corank(adjacency(w).bits()) + 1 << '\n';
    } else if (c_dd->parsed()) {
      const FramedWord w = word();
      if (const auto split = is_d_diagram(w))
        out << "d-diagram: yes\nfirst: " << names_of(w, split->first) << "\nsecond: "
            << names_of(w, split->second) << '\n';
      else
        out << "d-diagram: no\n";
    } else if (c_tours->parsed()) {
      const auto [g, t] = from_word(word());
      const auto tours = all_euler_tours(g, bound);
      out << "count: " << tours.size() << '\n';
      for (const auto& tour : tours) out << to_text(tour_word(g, tour)) << '\n';
    } else if (c_dot->parsed()) {
      const FramedWord w = word();
      if (json) {
        nlohmann::ordered_json doc;
        doc["word"] = to_text(w);
        doc["length"] = w.length();
        doc["chords"] = nlohmann::ordered_json::array();
        for (std::size_t l = 0; l < w.letter_count(); ++l) {
          const auto [p, q] = w.occurrences(l);
          doc["chords"].push_back({{"letter", w.alphabet()[l]},
                                   {"framing", std::string(1, framing_symbol(w.framing(l)))},
                                   {"endpoints", {p + 1, q + 1}}});
        }
        out << doc.dump(2) << '\n';
      } else {
        const FramedAdjacency a = adjacency(w);
        out << "graph interlacement {\n";
        for (std::size_t l = 0; l < w.letter_count(); ++l)
          out << "  \"" << w.alphabet()[l] << "\" [framing=\"" << framing_symbol(w.framing(l))
              << "\"];\n";
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.offdiag(i, j))
              out << "  \"" << w.alphabet()[i] << "\" -- \"" << w.alphabet()[j] << "\";\n";
        out << "}\n";
      }
    } else if (c_inv->parsed()) {
      BitMatrix m = parse_bit_matrix(read_file(file_arg));
      if (plus_identity) m += BitMatrix::identity(m.rows());
      out << to_text(inverse(m));
    } else if (c_chi->parsed()) {
      out << to_text(chi(sym()).rep);
    } else if (c_chiinv->parsed()) {
      const DiagClass c = diag_class(sym());
      const CircuitClass cc = chi_inverse(c, bound);
      out << "det1-representative:\n" << to_text(det1_representative(c)) << "circuit-class:\n"
          << to_text(cc.rep) << "canonical: " << (cc.canonical ? "yes" : "undecided") << '\n';
    } else if (c_loc->parsed()) {
      const SymMatrix a = sym();
      out << to_text(loc(a, one_based(a, index_i)));
    } else if (c_piv->parsed()) {
      const SymMatrix a = sym();
      out << to_text(pivot(a, one_based(a, index_i), one_based(a, index_j)));
    } else if (c_orbit->parsed()) {
      const auto orbit = orbit_C(sym(), bound);
      out << "size: " << orbit.size() << "\ncanonical:\n" << to_text(orbit.front());
    } else if (c_real->parsed()) {
      const auto target = parse_framed_adjacency(read_file(file_arg));
      if (const auto w = realize(target, bound))
        out << to_text(*w) << '\n';
      else
        out << "not realizable\n";
    } else if (c_rand->parsed()) {
      const WordMode m = mode == "gaussian_only"   ? WordMode::GaussianOnly
                         : mode == "rotating_only" ? WordMode::RotatingOnly
                                                   : WordMode::Any;
      out << to_text(random_word(count, seed, m)) << '\n';
    } else if (c_verify->parsed()) {
      bool all_passed = true;
      const auto names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      for (const auto& name : names) {
        const CriterionResult r = run_suite(name);
        all_passed &= r.passed;
        out << format_result(r) << '\n';
      }
      return all_passed ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.code());
  }
  return kOk;
}

}  // namespace framed::cli
