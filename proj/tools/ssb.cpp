// ssb: command line front end for surface braid words.
//
// exit codes: 0 definite answer, 1 parse or usage error, 2 Unknown or budget exhausted,
// 3 definite negative (not a member, invalid certificate, nontrivial link).
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ssb/classify.hpp"

using namespace ssb;
using nlohmann::json;

namespace {

constexpr int Ok = 0, Usage = 1, Unknown = 2, Negative = 3;

bool as_json = false;

void emit(const json& payload, const std::string& text) {
  if (as_json)
    std::cout << payload.dump(2) << '\n';
  else
    std::cout << text;
}

// "[...]_m" closed form, or a bare word read on --strands.
ClosedWord closed_input(const std::string& text, int strands) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[')
    return parse_closed(text);
  if (strands < 1)
    throw parse_error("a bare word needs --strands", 0);
  return ClosedWord(parse_word(text, strands));
}

ResolutionSign sign_of(const std::string& s) {
  if (s == "+" || s == "plus")
    return ResolutionSign::Plus;
  if (s == "-" || s == "minus")
    return ResolutionSign::Minus;
  throw parse_error("sign must be + or -", 0);
}

Closure closure_of(const std::string& s) {
  if (s == "trace")
    return Closure::Trace;
  if (s == "plat")
    return Closure::Plat;
  throw parse_error("closure must be trace or plat", 0);
}

MoveSet moves_of(const std::string& s) {
  MoveSet m{false, false, false};
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "r1" || tok == "R1")
      m.r1 = true;
    else if (tok == "r2" || tok == "R2")
      m.r2 = true;
    else if (tok == "r3" || tok == "R3")
      m.r3 = true;
    else
      throw parse_error("unknown move " + tok, 0);
  }
  return m;
}

json verdict_json(const CsbVerdict& v) {
  auto side = [](const TrivialityVerdict& t) {
    return json{{"verdict", verdict_name(t.verdict)}, {"components", t.components}, {"crossings", t.crossings}};
  };
  return {{"plus", side(v.plus)}, {"minus", side(v.minus)}, {"member", v.member()}, {"excluded", v.excluded()}};
}

std::string steps_text(const RewriteCertificate& cert) {
  std::ostringstream os;
  ClosedWord cur = cert.start;
  os << "  " << cur << '\n';
  for (const auto& s : cert.steps) {
    cur = apply_step(cur, s);
    os << "  " << s.str();
    if (!s.evidence.empty())
      os << " {" << s.evidence << "}";
    os << "  ->  " << cur << '\n';
  }
  return os.str();
}

int search_exit(const SearchResult& r) { return r.found() ? Ok : Unknown; }

struct SearchFlags {
  std::size_t max_len = 0;
  std::size_t max_exp = 1000000;
  int max_strands = 0;
  bool lax = false;
  std::string rules = "all";

  void add(CLI::App* cmd) {
    cmd->add_option("--max-len", max_len, "longest intermediate word (0: longest input + 6)");
    cmd->add_option("--max-exp", max_exp, "node expansion budget");
    cmd->add_option("--max-strands", max_strands, "strand cap (0: most strands among the inputs)");
    auto* strict = cmd->add_flag("--strict", "verify every C-move side condition (default)");
    cmd->add_flag("--lax", lax, "skip C-move side conditions")->excludes(strict);
    cmd->add_option("--rules", rules, "rule set, e.g. A1-A13,C1 or all");
  }

  SearchOptions options() const {
    SearchOptions opt;
    opt.rules = parse_rule_set(rules);
    opt.strictness = lax ? Strictness::Lax : Strictness::Strict;
    opt.budget.max_word_length = max_len;
    opt.budget.max_expansions = max_exp;
    opt.budget.max_strands = max_strands;
    return opt;
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface braid words: resolutions, rewriting certificates, classification"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "machine-readable output");
  std::function<int()> run;

  int strands = 0;
  std::string word, word2, sign = "+", closure = "trace", file;
  CsbBudget csb;

  auto* normalize = app.add_subcommand("normalize", "normal form of a CSB_2 word");
  normalize->add_option("word", word)->required();
  normalize->add_option("--strands", strands)->default_val(2);
  bool certify = false;
  normalize->add_flag("--certify", certify, "also search for a strict certificate to the normal form");
  normalize->callback([&] {
    run = [&] {
      auto w = closed_input(word, strands);
      auto v = csb_membership(w, csb);
      if (!v.member()) {
        emit({{"word", w.str()}, {"csb", verdict_json(v)}}, w.str() + " not certified in CSB_2 (" +
                                                                 csb_evidence(v) + ")\n");
        return v.excluded() ? Negative : Unknown;
      }
      auto nf = normalize_csb2(w, csb);
      auto cls = assign_class(nf);
      json out{{"word", w.str()},
               {"normal_form", nf.str()},
               {"class", cls.representative.str()},
               {"route", route_name(cls.route)}};
      std::string text = nf.str() + "\nclass " + cls.representative.str() + " (" + route_name(cls.route) + ")\n";
      int code = Ok;
      if (certify) {
        auto r = certify_normal_form(w);
        if (r.found()) {
          out["certificate"] = to_json(*r.certificate);
          text += steps_text(*r.certificate);
        } else {
          out["certificate"] = nullptr;
          text += "no certificate within budget\n";
          code = Unknown;
        }
      }
      emit(out, text);
      return code;
    };
  });

  auto* equiv = app.add_subcommand("equiv", "search for a rewriting certificate between two closed words");
  SearchFlags search_flags;
  std::string out_file;
  equiv->add_option("u", word)->required();
  equiv->add_option("v", word2)->required();
  equiv->add_option("--out", out_file, "write the certificate as JSON");
  search_flags.add(equiv);
  equiv->callback([&] {
    run = [&] {
      auto u = parse_closed(word), v = parse_closed(word2);
      auto r = equiv_search(u, v, search_flags.options());
      json out{{"status", r.found() ? "found" : "unknown"}, {"expansions", r.expansions}, {"restarts", r.restarts}};
      std::string text;
      if (r.found()) {
        out["certificate"] = to_json(*r.certificate);
        text = std::to_string(r.certificate->steps.size()) + " steps (" +
               strictness_name(r.certificate->strictness) + ")\n" + steps_text(*r.certificate);
        if (!out_file.empty())
          std::ofstream(out_file) << to_json(*r.certificate).dump(2) << '\n';
      } else {
        out["note"] = r.note;
        text = "Unknown after " + std::to_string(r.expansions) + " expansions" +
               (r.note.empty() ? "" : ": " + r.note) + "\n";
      }
      emit(out, text);
      return search_exit(r);
    };
  });

  auto* resolve_cmd = app.add_subcommand("resolve", "resolve marked vertices into a classical diagram");
  resolve_cmd->add_option("word", word)->required();
  resolve_cmd->add_option("--sign", sign)->default_val("+");
  resolve_cmd->add_option("--strands", strands);
  resolve_cmd->add_option("--closure", closure, "trace or plat")->default_val("trace");
  resolve_cmd->callback([&] {
    run = [&] {
      auto w = closed_input(word, strands);
      auto t = resolve(w.word(), sign_of(sign));
      auto d = close_tangle(t, closure_of(closure));
      auto pd = export_pd(d);
      emit({{"tangle", t.str()}, {"strands", t.strands()}, {"pd", pd}, {"components", count_components(d)}},
           "tangle " + t.str() + "\ncomponents " + std::to_string(count_components(d)) + "\n" + pd + "\n");
      return Ok;
    };
  });

  auto* csb_check = app.add_subcommand("csb-check", "are both resolutions trivial links");
  csb_check->add_option("word", word)->required();
  csb_check->add_option("--strands", strands);
  csb_check->add_option("--budget", csb.max_expansions, "simplifier expansions per resolution");
  csb_check->add_option("--headroom", csb.headroom, "extra crossings the simplifier may create");
  csb_check->callback([&] {
    run = [&] {
      auto w = closed_input(word, strands);
      auto v = csb_membership(w, csb);
      std::string text = w.str() + "\nL+ " + verdict_name(v.plus.verdict) + " (" +
                         std::to_string(v.plus.components) + " components)\nL- " +
                         verdict_name(v.minus.verdict) + " (" + std::to_string(v.minus.components) +
                         " components)\n" + (v.member() ? "member" : v.excluded() ? "not a member" : "unknown") +
                         "\n";
      emit(verdict_json(v), text);
      return v.member() ? Ok : v.excluded() ? Negative : Unknown;
    };
  });

  auto* euler = app.add_subcommand("euler", "Euler characteristic from resolution components");
  euler->add_option("word", word)->required();
  euler->add_option("--strands", strands);
  euler->callback([&] {
    run = [&] {
      auto w = closed_input(word, strands);
      auto s = surface_invariants(w, csb);
      emit({{"euler", s.euler_characteristic},
            {"components_plus", s.components_plus},
            {"components_minus", s.components_minus},
            {"marked_vertices", s.saddle_count}},
           "chi " + std::to_string(s.euler_characteristic) + "  c+ " + std::to_string(s.components_plus) +
               "  c- " + std::to_string(s.components_minus) + "  saddles " + std::to_string(s.saddle_count) +
               "\n");
      return Ok;
    };
  });

  auto* spin = app.add_subcommand("twist-spin", "closed word of the n-twist-spun tangle");
  int twists = 0;
  bool mirror = false;
  spin->add_option("--tangle", word, "crossing word on 2m+1 strands")->required();
  spin->add_option("--strands", strands)->required();
  spin->add_option("--twists", twists)->default_val(0);
  spin->add_flag("--mirror", mirror, "mirror the result");
  spin->callback([&] {
    run = [&] {
      auto w = twist_spin(parse_word(word, strands), twists);
      if (mirror)
        w = mirror_closure(w);
      emit({{"word", w.str()}, {"strands", w.strands()}, {"length", w.size()}}, w.str() + "\n");
      return Ok;
    };
  });

  auto* dnk = app.add_subcommand("dnk", "braid of D_{n,k} and its plat closure");
  int n = 2, k = 3;
  bool emit_pd = false;
  dnk->add_option("--n", n)->default_val(2);
  dnk->add_option("--k", k)->default_val(3);
  dnk->add_flag("--emit-pd", emit_pd);
  dnk->callback([&] {
    run = [&] {
      auto t = dnk_word(n, k);
      auto d = plat_closure(t);
      json out{{"tangle", t.str()}, {"crossings", d.crossing_count()}, {"components", count_components(d)}};
      std::string text = t.str() + "\n" + std::to_string(d.crossing_count()) + " crossings, " +
                         std::to_string(count_components(d)) + " components\n";
      if (emit_pd) {
        out["pd"] = export_pd(d);
        text += export_pd(d) + "\n";
      }
      emit(out, text);
      return Ok;
    };
  });

  auto* simplify = app.add_subcommand("simplify", "Reidemeister simplification with a move trace");
  std::string moves = "r1,r2,r3";
  SimplifyBudget sb;
  sb.headroom = 4;
  simplify->add_option("input", word, "PD code, closed surface word, or tangle word")->required();
  simplify->add_option("--moves", moves)->default_val("r1,r2,r3");
  simplify->add_option("--max-crossings", sb.max_crossings, "crossing cap (0: input + 4)");
  simplify->add_option("--max-exp", sb.max_expansions);
  simplify->add_option("--sign", sign, "resolution for a surface word")->default_val("+");
  simplify->add_option("--strands", strands, "strands of a tangle word");
  simplify->add_option("--closure", closure, "closure of a tangle word")->default_val("trace");
  simplify->callback([&] {
    run = [&] {
      PlanarDiagram d;
      if (looks_like_pd(word))
        d = import_pd(word);
      else if (word.find('[') != std::string::npos)
        d = resolved_closure(parse_closed(word), sign_of(sign));
      else if (strands >= 1)
        d = close_tangle(parse_tangle(word, strands), closure_of(closure));
      else
        throw parse_error("a tangle word needs --strands", 0);
      const int start = d.crossing_count();
      auto r = reidemeister_simplify(d, moves_of(moves), sb);
      json trace = json::array();
      std::string text = std::to_string(start) + " crossings\n";
      for (const auto& m : r.trace) {
        trace.push_back({{"move", move_name(m.move)}, {"increasing", m.increasing}, {"crossings", m.crossings_after}});
        text += std::string("  ") + move_name(m.move) + (m.increasing ? "+" : "") + " -> " +
                std::to_string(m.crossings_after) + "\n";
      }
      const int left = r.final_diagram.crossing_count();
      const int comps = count_components(r.final_diagram);
      text += "R1 " + std::to_string(r.counts.r1) + "  R2 " + std::to_string(r.counts.r2) + "  R3 " +
              std::to_string(r.counts.r3) + "\n" +
              (r.reached_zero ? "Trivial: unlink of " + std::to_string(comps) + " components"
                              : "Unknown: stuck at " + std::to_string(left) + " crossings") +
              "\n";
      emit({{"start_crossings", start},
            {"reached_zero", r.reached_zero},
            {"final_crossings", left},
            {"components", comps},
            {"counts", {{"R1", r.counts.r1}, {"R2", r.counts.r2}, {"R3", r.counts.r3}}},
            {"expansions", r.expansions},
            {"trace", trace}},
           text);
      return r.reached_zero ? Ok : Unknown;
    };
  });

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a closed tangle word or PD code");
  bracket->add_option("input", word)->required();
  bracket->add_option("--strands", strands);
  bracket->add_option("--closure", closure)->default_val("trace");
  bracket->callback([&] {
    run = [&] {
      LaurentPolynomial p;
      int w = 0;
      if (looks_like_pd(word)) {
        auto d = import_pd(word);
        p = bracket_state_sum(d);
        w = writhe(d);
      } else {
        auto t = parse_tangle(word, strands);
        p = kauffman_bracket(t, closure_of(closure));
        w = writhe(close_tangle(t, closure_of(closure)));
      }
      auto f = normalized_bracket(p, w);
      emit({{"bracket", p.str()}, {"writhe", w}, {"normalized", f.str()}},
           "<D> = " + p.str() + "\nwrithe " + std::to_string(w) + "\nf = " + f.str() + "\n");
      return Ok;
    };
  });

  auto* classify = app.add_subcommand("classify", "enumerate CSB_2 words and group their normal forms");
  int max_len = 6;
  classify->add_option("--max-len", max_len)->default_val(6);
  classify->callback([&] {
    run = [&] {
      auto r = enumerate_csb2(max_len, csb);
      json classes = json::array();
      std::ostringstream os;
      os << "words " << r.enumerated << "  members " << r.members << "  excluded " << r.excluded
         << "  undecided " << r.undecided << "\n\n";
      os << "normal form       chi  c+  c-  members  routes\n";
      for (const auto& c : r.classes) {
        json routes;
        std::string rt;
        for (const auto& [route, count] : c.by_route) {
          routes[route_name(route)] = count;
          rt += std::string(rt.empty() ? "" : ", ") + route_name(route) + " " + std::to_string(count);
        }
        classes.push_back({{"normal_form", c.representative.str()},
                           {"euler", c.invariants.euler_characteristic},
                           {"components_plus", c.invariants.components_plus},
                           {"components_minus", c.invariants.components_minus},
                           {"members", c.members},
                           {"routes", routes}});
        std::string name = c.representative.str();
        name.resize(std::max<std::size_t>(name.size(), 16), ' ');
        os << name << "  " << std::setw(3) << c.invariants.euler_characteristic << " " << std::setw(3)
           << c.invariants.components_plus << " " << std::setw(3) << c.invariants.components_minus << " "
           << std::setw(8) << c.members << "  " << rt << "\n";
      }
      os << "\nnot separated by these invariants:";
      json pairs = json::array();
      for (const auto& [x, y] : r.unverified_pairs) {
        os << "  " << x << " / " << y;
        pairs.push_back({x, y});
      }
      os << "\n";
      emit({{"max_length", r.max_length},
            {"enumerated", r.enumerated},
            {"members", r.members},
            {"excluded", r.excluded},
            {"undecided", r.undecided},
            {"classes", classes},
            {"unverified_pairs", pairs}},
           os.str());
      return r.undecided == 0 ? Ok : Unknown;
    };
  });

  auto* index = app.add_subcommand("index", "upper bound on the braid index by certified destabilization");
  SearchFlags index_flags;
  index->add_option("word", word)->required();
  index->add_option("--strands", strands);
  index_flags.add(index);
  index->callback([&] {
    run = [&] {
      auto w = closed_input(word, strands);
      auto b = index_upper_bound(w, index_flags.options());
      json out{{"word", w.str()}, {"upper_bound", b.strands}, {"expansions", b.expansions}};
      std::string text = "index <= " + std::to_string(b.strands) + "\n";
      if (b.certificate) {
        out["certificate"] = to_json(*b.certificate);
        text += steps_text(*b.certificate);
      }
      emit(out, text);
      return Ok;
    };
  });

  auto* replay = app.add_subcommand("replay", "check a certificate file step by step");
  replay->add_option("file", file)->required()->check(CLI::ExistingFile);
  replay->add_option("--budget", csb.max_expansions, "simplifier expansions for side conditions");
  replay->callback([&] {
    run = [&] {
      std::ifstream in(file);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw parse_error(std::string("certificate file: ") + e.what(), 0);
      }
      auto cert = certificate_from_json(j);
      auto rep = replay_certificate(cert, csb);
      emit({{"valid", rep.valid}, {"failed_step", rep.failed_step}, {"message", rep.message}},
           rep.valid ? "valid (" + std::to_string(cert.steps.size()) + " steps)\n"
                     : "invalid" + (rep.failed_step >= 0 ? " at step " + std::to_string(rep.failed_step) : "") +
                           ": " + rep.message + "\n");
      return rep.valid ? Ok : Negative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }
  try {
    return run();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return Usage;
}
