#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlsig/analysis.hpp"
#include "tlsig/linkfile.hpp"

namespace tlsig::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 2, kCounterexample = 3 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"alexander", "signature", "profile", "sigma1",
                                              "linking",   "check",     "hodge"};
  return names;
}

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string at = "-1,0";
  int remove_index = 0;  // 0: last component
  bool pretty = false;
  int jobs = 1;
};

/// Result of one command on one file.
struct Outcome {
  Json json;
  std::vector<std::string> table;  // "key: value" rows for --pretty
  int code = kOk;
};

inline Json to_json(const IntPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(integer_to_json(x));
  return c;
}

inline Json to_json(const RationalPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coefficients()) c.push_back(to_string(x));
  return c;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const InertiaTriple& t) {
  return Json{{"positive", t.positive},
              {"negative", t.negative},
              {"zero", t.zero},
              {"signature", t.signature()}};
}

inline Json to_json(const GaussianRational& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

inline Json to_json(const AlexanderPolynomial& a) {
  Json j;
  j["poly"] = to_json(a.poly);
  j["normalized"] = to_json(a.normalized);
  j["display"] = display(a);
  j["t_power"] = a.t_power;
  j["t1_multiplicity"] = a.t1_multiplicity;
  j["is_zero"] = a.is_zero;
  return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::string inertia_text(const InertiaTriple& t) {
  std::ostringstream os;
  os << t.signature() << " (+" << t.positive << " -" << t.negative << " 0:" << t.zero << ")";
  return os.str();
}

inline std::string hypothesis_warning(const AlexanderPolynomial& a, int r) {
  if (a.is_zero) return "Alexander polynomial is zero; hypothesis not satisfied";
  return "(t-1)^" + std::to_string(a.t1_multiplicity) + " divides Delta with r = " +
         std::to_string(r) + "; limit-signature hypothesis not satisfied";
}

namespace detail {

inline Outcome cmd_alexander(const LinkFile& lf, const SeifertMatrix& s) {
  Outcome o;
  AlexanderPolynomial a = alexander_poly(s);
  bool holds = hypothesis_holds(a, lf.components);
  o.json["alexander"] = to_json(a);
  o.json["hypothesis_holds"] = holds;
  o.table = {"Delta: " + display(a), "t1 multiplicity: " + std::to_string(a.t1_multiplicity),
             std::string("hypothesis holds: ") + (holds ? "yes" : "no")};
  return o;
}

inline Outcome cmd_signature(const SeifertMatrix& s, const GaussianRational& z) {
  Outcome o;
  InertiaTriple in = signature(levine_tristram_matrix(s, z));
  o.json["z"] = to_json(z);
  o.json["inertia"] = to_json(in);
  o.json["signature"] = in.signature();
  o.table = {"z: " + to_string(z.re) + " + " + to_string(z.im) + "i",
             "signature: " + inertia_text(in)};
  return o;
}

inline Outcome cmd_profile(const SeifertMatrix& s) {
  Outcome o;
  SignatureProfile p = signature_profile(s);
  o.json["alexander"] = to_json(p.alexander);
  Json roots;
  roots["root_at_1"] = p.roots.root_at_1;
  roots["root_at_minus1"] = p.roots.root_at_minus1;
  roots["x_poly"] = to_json(p.roots.x_poly);
  Json ivs = Json::array();
  for (std::size_t k = 0; k < p.roots.x_intervals.size(); ++k)
    ivs.push_back(Json{{"lo", to_string(p.roots.x_intervals[k].lo)},
                       {"hi", to_string(p.roots.x_intervals[k].hi)},
                       {"multiplicity", p.roots.x_multiplicities[k]}});
  roots["x_intervals"] = std::move(ivs);
  o.json["circle_roots"] = std::move(roots);
  Json arcs = Json::array();
  o.table.push_back("Delta: " + display(p.alexander));
  for (const auto& av : p.arcs) {
    arcs.push_back(Json{{"lower_x", to_string(av.arc.lower_x)},
                        {"upper_x", to_string(av.arc.upper_x)},
                        {"sample_z", to_json(av.arc.sample_z)},
                        {"signature", av.signature()},
                        {"nullity", av.nullity()}});
    o.table.push_back("arc x in (" + to_string(av.arc.lower_x) + ", " +
                      to_string(av.arc.upper_x) + "): " + inertia_text(av.inertia));
  }
  o.json["arcs"] = std::move(arcs);
  o.json["value_at_minus1"] = p.value_at_minus1 ? to_json(*p.value_at_minus1) : Json(nullptr);
  o.json["sigma_one"] = p.sigma_one;
  if (p.value_at_minus1) o.table.push_back("sigma(-1): " + inertia_text(*p.value_at_minus1));
  o.table.push_back("sigma^1: " + std::to_string(p.sigma_one));
  return o;
}

inline Outcome cmd_sigma1(const LinkFile& lf, const SeifertMatrix& s) {
  Outcome o;
  SignatureProfile p = signature_profile(s);
  o.json["sigma_one"] = p.sigma_one;
  bool holds = hypothesis_holds(p.alexander, lf.components);
  o.json["hypothesis_holds"] = holds;
  if (!holds) o.json["warnings"].push_back(hypothesis_warning(p.alexander, lf.components));
  o.table = {"sigma^1: " + std::to_string(p.sigma_one)};
  return o;
}

inline Outcome cmd_linking(const LinkFile& lf, int remove_index) {
  Outcome o;
  if (!lf.linking_numbers) throw InvalidArgument("file has no linking_numbers");
  LinkingMatrix a = linking_matrix(*lf.linking_numbers, lf.components);
  InertiaTriple sa = signature(a.entries);
  SmallLinkingMatrix h =
      small_linking_matrix(a, remove_index == 0 ? lf.components : remove_index);
  InertiaTriple sh = signature(h.entries);
  o.json["linking_matrix"] = to_json(a.entries);
  o.json["inertia"] = to_json(sa);
  o.json["small_linking_matrix"] = Json{{"removed_index", h.removed_index},
                                        {"entries", to_json(h.entries)},
                                        {"inertia", to_json(sh)}};
  std::ostringstream am, hm;
  am << a.entries;
  hm << h.entries;
  o.table = {"linking matrix: " + am.str(), "signature: " + inertia_text(sa),
             "small linking matrix: " + hm.str(), "small signature: " + inertia_text(sh)};
  return o;
}

inline Outcome cmd_check(const LinkFile& lf, const SeifertMatrix& s) {
  Outcome o;
  TheoremReport rep = check_theorem(s, lf.components, lf.linking_numbers);
  Json q;
  q["a_linking_signature"] = optional_json(rep.linking_signature);
  q["b_small_linking_signature"] = optional_json(rep.small_linking_signature);
  q["c_restricted_signature"] = rep.restricted_signature;
  q["d_restricted_signature"] = rep.restricted_signature;
  q["e_hodge_difference"] = optional_json(rep.hodge_difference);
  q["f_sigma_one"] = optional_json(rep.sigma_one);
  o.json["quantities"] = std::move(q);
  o.json["hypothesis"] = Json{{"delta_nonzero", rep.hypothesis.delta_nonzero},
                              {"t1_multiplicity", rep.hypothesis.t1_multiplicity},
                              {"r", rep.hypothesis.components},
                              {"consistent", rep.hypothesis.consistent},
                              {"holds", rep.hypothesis.holds}};
  o.json["verdict"] = to_string(rep.verdict);
  o.json["sigma_one"] = optional_json(rep.sigma_one);
  for (const auto& w : rep.warnings) o.json["warnings"].push_back(w);
  auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  o.table = {"(a) linking signature: " + show(rep.linking_signature),
             "(b) small linking signature: " + show(rep.small_linking_signature),
             "(c,d) restricted signature: " + std::to_string(rep.restricted_signature),
             "(e) p11(+) - p11(-): " + show(rep.hodge_difference),
             "(f) sigma^1: " + show(rep.sigma_one),
             std::string("verdict: ") + to_string(rep.verdict)};
  if (rep.verdict == Verdict::counterexample) o.code = kCounterexample;
  return o;
}

inline Outcome cmd_hodge(const LinkFile& lf, const SeifertMatrix& s) {
  Outcome o;
  HodgeAggregates h = hodge_aggregates(s, lf.components);
  o.json["weighted_sum"] = h.weighted_sum;
  o.json["count_sum"] = h.count_sum;
  o.json["p11_plus"] = h.resolved ? Json(h.p11_plus) : Json(nullptr);
  o.json["p11_minus"] = h.resolved ? Json(h.p11_minus) : Json(nullptr);
  o.json["resolved"] = h.resolved;
  o.table = {"sum k p^k_1: " + std::to_string(h.weighted_sum),
             "sum p^k_1: " + std::to_string(h.count_sum),
             h.resolved ? "p^1_1(+1) = " + std::to_string(h.p11_plus) +
                              ", p^1_1(-1) = " + std::to_string(h.p11_minus)
                        : std::string("p^1_1 unresolved")};
  return o;
}

}  // namespace detail

/// Runs one command on one link file. Never throws.
inline Outcome run_file(const Options& opt, const std::string& path) {
  Outcome o;
  Json head;
  head["file"] = path;
  head["command"] = opt.command;
  try {
    LinkFile lf = load_link_file(path);
    SeifertMatrix s = lf.seifert_matrix();
    head["name"] = lf.name;
    head["components"] = lf.components;
    const std::string& c = opt.command;
    if (c == "alexander")
      o = detail::cmd_alexander(lf, s);
    else if (c == "signature")
      o = detail::cmd_signature(s, parse_gaussian(opt.at));
    else if (c == "profile")
      o = detail::cmd_profile(s);
    else if (c == "sigma1")
      o = detail::cmd_sigma1(lf, s);
    else if (c == "linking")
      o = detail::cmd_linking(lf, opt.remove_index);
    else if (c == "check")
      o = detail::cmd_check(lf, s);
    else
      o = detail::cmd_hodge(lf, s);
    if (c != "check" && c != "linking")
      if (auto w = s.consistency_warning()) o.json["warnings"].push_back(*w);
  } catch (const Error& e) {
    o = Outcome{};
    o.json["error"] = e.what();
    o.table = {std::string("error: ") + e.what()};
    o.code = kInputError;
  }
  head.update(o.json);
  o.json = std::move(head);
  return o;
}

/// Full command-line entry point; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tristram-Levine signature invariants of links from Seifert matrices", "tlsig"};
  app.add_option("command", opt.command, "alexander | signature | profile | sigma1 | linking | check | hodge")
      ->required();
  app.add_option("files", opt.files, "link files (JSON)")->required();
  app.add_option("--at", opt.at, "unit-circle point re,im with p/q parts (signature)");
  app.add_option("--remove-index", opt.remove_index, "component removed for the small linking matrix")
      ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", opt.pretty, "append a human-readable table");
  app.add_option("--jobs", opt.jobs, "files processed concurrently")->check(CLI::PositiveNumber);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tlsig: " << e.what() << "\n";
    return kInputError;
  }
  if (std::find(commands().begin(), commands().end(), opt.command) == commands().end()) {
    err << "tlsig: unknown command '" << opt.command << "'\n";
    return kInputError;
  }
  if (opt.command == "signature") {
    try {
      GaussianRational z = parse_gaussian(opt.at);
      if (z.norm() != 1) {
        err << "tlsig: --at " << opt.at << " is not on the unit circle\n";
        return kInputError;
      }
    } catch (const Error& e) {
      err << "tlsig: bad --at value: " << e.what() << "\n";
      return kInputError;
    }
  }

  std::vector<Outcome> results(opt.files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < opt.files.size(); k = next++) results[k] = run_file(opt, opt.files[k]);
  };
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(opt.jobs), opt.files.size());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int code = kOk;
  for (const auto& r : results) {
    out << r.json.dump() << "\n";
    if (opt.pretty) {
      out << "# " << r.json.value("file", std::string()) << "\n";
      for (const auto& line : r.table) out << "  " << line << "\n";
    }
    if (r.json.contains("warnings"))
      for (const auto& w : r.json["warnings"])
        err << "tlsig: warning: " << r.json.value("file", std::string()) << ": "
            << w.get<std::string>() << "\n";
    if (r.json.contains("error"))
      err << "tlsig: " << r.json.value("file", std::string()) << ": "
          << r.json["error"].get<std::string>() << "\n";
    code = std::max(code, r.code);
  }
  return code;
}

}  // namespace tlsig::cli
