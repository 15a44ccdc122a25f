#include "echcap_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "echcap/echcap.hpp"
#include "echcap_cli/domain_spec.hpp"

namespace echcap::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string str(const CapacityValue& v) { return v.to_string(); }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

ordered_json rationals(const std::vector<Rational>& xs) {
  ordered_json a = ordered_json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

// "2a1+a3<5"
std::string inequality_text(const std::vector<std::int64_t>& multipliers, std::int64_t d, const char* rel) {
  std::string s;
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (multipliers[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (multipliers[i] != 1) s += std::to_string(multipliers[i]);
    s += "a" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  return s + rel + std::to_string(d);
}

ordered_json inequality_json(const PackingInequality& q) {
  return {{"multipliers", q.multipliers},
          {"d", q.d},
          {"lhs", q.lhs.to_string()},
          {"satisfied", q.satisfied},
          {"text", inequality_text(q.multipliers, q.d, "<")}};
}

std::uint64_t parse_node_limit(const std::string& text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
    throw InvalidArgument("ECHCAP_NODE_LIMIT must be a positive integer, got '" + text + "'");
  }
  return v;
}

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Options {
  std::uint64_t node_limit = kDefaultNodeLimit;
  std::string meta_path;

  std::string spec, inner, outer, value, list;
  std::int64_t kmax = 0;
  std::int64_t dmax = 0;
  std::int64_t stride = 1000;
  bool full = false;
  std::string mode = "weak";
  std::string format;

  ToricOptions toric() const {
    ToricOptions t;
    t.node_limit = node_limit;
    return t;
  }
};

int cmd_capacities(const Options& o, std::ostream& out) {
  Domain d = parse_domain(o.spec);
  std::optional<CapacitySequence> seq;
  ordered_json witnesses;
  if (o.full) {
    const auto* e = std::get_if<Ellipsoid>(&d.variant());
    const auto* b = std::get_if<Ball>(&d.variant());
    if (!e && !b) throw InvalidArgument("--full is available for ellipsoids and balls only");
    if (o.kmax < 1) throw InvalidArgument("--full needs --kmax >= 1");
    seq = e ? ellipsoid_full_capacities(e->a, e->b, o.kmax) : ellipsoid_full_capacities(b->a, b->a, o.kmax);
  } else if (const auto* t = std::get_if<ToricNorm>(&d.variant())) {
    if (o.kmax < 0) throw InvalidArgument("--kmax must be >= 0");
    std::vector<CapacityValue> values;
    witnesses = ordered_json::array();
    for (std::int64_t k = 0; k <= o.kmax; ++k) {
      auto r = toric_capacity(t->norm, k, o.toric());
      values.push_back(r.value);
      witnesses.push_back({{"k", k}, {"polygon", ordered_json::parse(r.witness.to_string())},
                           {"tied_candidates", r.tied_candidates}});
    }
    seq = CapacitySequence(IndexOrigin::Distinguished, std::move(values));
  } else {
    seq = capacities(d, o.kmax, o.toric());
  }

  if (o.format == "json") {
    ordered_json j{{"command", "capacities"},
                   {"domain", d.describe()},
                   {"index_origin", seq->first_index()},
                   {"kmax", seq->kmax()}};
    ordered_json vals = ordered_json::array();
    for (const auto& v : seq->entries()) vals.push_back(str(v));
    j["values"] = vals;
    if (!witnesses.is_null()) j["witnesses"] = witnesses;
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "k,value\n";
    for (std::int64_t k = seq->first_index(); k <= seq->kmax(); ++k) out << k << "," << str(seq->at(k)) << "\n";
  } else {
    std::string line;
    for (const auto& v : seq->entries()) line += (line.empty() ? "" : ",") + str(v);
    out << line << "\n";
  }
  return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  Domain inner = parse_domain(o.inner), outer = parse_domain(o.outer);
  auto mode = o.mode == "strict" ? DominanceMode::InteriorStrict : DominanceMode::Weak;
  auto v = embedding_obstruction(inner, outer, o.kmax, mode, o.toric());
  if (o.format == "text") {
    if (v.obstructed) {
      out << "obstructed at k=" << v.witness_k << ": c_k(inner)=" << str(v.lower) << ", c_k(outer)=" << str(v.upper)
          << "\n";
    } else {
      out << "no obstruction up to k=" << v.kmax << "\n";
    }
  } else {
    ordered_json j{{"command", "embed"},          {"inner", inner.describe()}, {"outer", outer.describe()},
                   {"mode", o.mode},              {"kmax", v.kmax},            {"obstructed", v.obstructed},
                   {"witness_k", nullptr},        {"lower", nullptr},          {"upper", nullptr}};
    if (v.obstructed) {
      j["witness_k"] = v.witness_k;
      j["lower"] = str(v.lower);
      j["upper"] = str(v.upper);
    }
    emit_json(out, j);
  }
  return v.obstructed ? kObstructed : kOk;
}

int cmd_bound(const Options& o, const std::string& name, std::ostream& out) {
  Rational a = Rational::parse(o.value);
  Rational b = name == "fbound" ? f_lower_bound(a, o.dmax) : g_lower_bound(a, o.dmax);
  if (o.format == "json") {
    emit_json(out, {{"command", name}, {"a", a.to_string()}, {"dmax", o.dmax}, {"lower_bound", b.to_string()}});
  } else {
    out << b.to_string() << "\n";
  }
  return kOk;
}

int cmd_pack(const Options& o, std::ostream& out) {
  auto radii = parse_rational_list(o.list);
  auto r = packing_obstructions(radii, o.dmax);
  std::vector<const PackingInequality*> violated;
  for (const auto& q : r.inequalities) {
    if (!q.satisfied) violated.push_back(&q);
  }
  const auto& bind = r.inequalities[r.binding];
  if (o.format == "json") {
    ordered_json v = ordered_json::array();
    for (const auto* q : violated) v.push_back(inequality_json(*q));
    emit_json(out, {{"command", "pack"},
                    {"radii", rationals(radii)},
                    {"dmax", o.dmax},
                    {"checked", r.inequalities.size()},
                    {"all_hold", r.all_hold},
                    {"binding", inequality_json(bind)},
                    {"violated", v}});
  } else {
    out << "binding " << inequality_text(bind.multipliers, bind.d, "<") << " lhs=" << bind.lhs.to_string() << " "
        << (bind.satisfied ? "satisfied" : "violated") << "\n";
    for (const auto* q : violated) {
      if (q == &bind) continue;
      out << "violated " << inequality_text(q->multipliers, q->d, "<") << " lhs=" << q->lhs.to_string() << "\n";
    }
    if (r.all_hold) {
      out << "no obstruction up to d=" << o.dmax << " (" << r.inequalities.size() << " inequalities)\n";
    } else {
      out << "obstructed: " << violated.size() << " of " << r.inequalities.size() << " inequalities fail up to d="
          << o.dmax << "\n";
    }
  }
  return r.all_hold ? kOk : kObstructed;
}

int cmd_biran(const Options& o, std::ostream& out) {
  auto radii = parse_rational_list(o.list);
  auto v = biran_sufficiency(radii, o.dmax);
  const char* status = v.status == BiranVerdict::Status::Sufficient    ? "Sufficient"
                       : v.status == BiranVerdict::Status::FailsVolume ? "FailsVolume"
                                                                       : "FailsInequality";
  if (o.format == "json") {
    ordered_json j{{"command", "biran"},        {"radii", rationals(radii)}, {"dmax", o.dmax}, {"status", status},
                   {"volume_sum", v.volume_sum.to_string()}, {"d", nullptr},             {"multipliers", nullptr}};
    if (v.status == BiranVerdict::Status::FailsInequality) {
      j["d"] = v.d;
      j["multipliers"] = v.multipliers;
    }
    emit_json(out, j);
  } else {
    switch (v.status) {
      case BiranVerdict::Status::Sufficient:
        out << "sufficient up to d=" << o.dmax << " (sum a_i^2 = " << v.volume_sum.to_string() << ")\n";
        break;
      case BiranVerdict::Status::FailsVolume:
        out << "fails volume: sum a_i^2 = " << v.volume_sum.to_string() << " > 1\n";
        break;
      case BiranVerdict::Status::FailsInequality:
        out << "fails inequality " << inequality_text(v.multipliers, v.d, "<=") << "\n";
        break;
    }
  }
  return kOk;
}

int cmd_asym(const Options& o, std::ostream& out) {
  Domain d = parse_domain(o.spec);
  AsymptoticsOptions ao;
  ao.toric = o.toric();
  auto r = volume_ratio_trace(d, o.kmax, o.stride, ao);
  if (o.format == "json") {
    ordered_json trace = ordered_json::array();
    for (const auto& p : r.trace) trace.push_back({{"k", p.k}, {"c_k", str(p.capacity)}, {"ratio", p.ratio}});
    emit_json(out, {{"command", "asym"},
                    {"domain", r.domain},
                    {"vol_x", str(r.vol_x)},
                    {"vol_y", str(r.vol_y)},
                    {"kmax", r.kmax},
                    {"stride", o.stride},
                    {"trace", trace},
                    {"final_ratio", r.final_ratio},
                    {"max_deviation_last_decade", r.max_deviation_last_decade},
                    {"truncated", r.truncated},
                    {"exploratory", r.exploratory}});
  } else {
    if (r.truncated) out << "# truncated: toric trace stops at k=" << r.kmax << "; the limit is not asserted\n";
    if (r.exploratory) out << "# exploratory: polydisk factors are not Liouville domains\n";
    out << "k,c_k,ratio\n";
    for (const auto& p : r.trace) out << p.k << "," << str(p.capacity) << "," << format_double(p.ratio) << "\n";
  }
  return kOk;
}

int cmd_qw(const Options& o, std::ostream& out) {
  Domain d = parse_domain(o.spec);
  AsymptoticsOptions ao;
  ao.toric = o.toric();
  auto r = qw_check(d, o.kmax, ao);
  const char* status = r.status == QwResult::Status::HoldsUpTo    ? "HoldsUpTo"
                       : r.status == QwResult::Status::ViolatedAt ? "ViolatedAt"
                                                                  : "Undecided";
  if (o.format == "json") {
    ordered_json j{{"command", "qw"}, {"domain", d.describe()}, {"kmax", o.kmax}, {"status", status},
                   {"k", r.k},        {"c_k", nullptr},         {"exploratory", r.exploratory}};
    if (r.status != QwResult::Status::HoldsUpTo) j["c_k"] = str(r.capacity);
    emit_json(out, j);
  } else {
    switch (r.status) {
      case QwResult::Status::HoldsUpTo:
        out << "holds up to k=" << r.k;
        break;
      case QwResult::Status::ViolatedAt:
        out << "violated at k=" << r.k << ": c_k=" << str(r.capacity);
        break;
      case QwResult::Status::Undecided:
        out << "undecided at k=" << r.k << ": c_k=" << str(r.capacity) << " within error of the bound";
        break;
    }
    out << (r.exploratory ? " (exploratory)\n" : "\n");
  }
  return kOk;
}

int cmd_weinstein(const Options& o, std::ostream& out) {
  Domain d = parse_domain(o.spec);
  auto w = weinstein_bound(d, o.toric());
  if (o.format == "json") {
    emit_json(out, {{"command", "weinstein"},
                    {"domain", d.describe()},
                    {"bound", str(w.bound)},
                    {"square", str(w.square)},
                    {"c1", str(w.c1)},
                    {"c1_below", w.c1_below}});
  } else {
    out << "bound " << str(w.bound) << " (square " << str(w.square) << "), c_1 = " << str(w.c1) << " "
        << (w.c1_below ? "below" : "NOT below") << "\n";
  }
  return kOk;
}

void write_meta(const Options& o, const std::vector<std::string>& args, const std::string& command,
                const std::string& started, double seconds, int code, std::ostream& err) {
  std::ofstream f(o.meta_path);
  if (!f) {
    err << "echcap: cannot write metadata to " << o.meta_path << "\n";
    return;
  }
  ordered_json j{{"tool", "echcap"},        {"version", kVersion},      {"command", command},
                 {"argv", args},            {"started_at", started},    {"elapsed_seconds", seconds},
                 {"node_limit", o.node_limit}, {"exit_code", code}};
  f << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  Options o;
  if (env.node_limit) {
    try {
      o.node_limit = parse_node_limit(*env.node_limit);
    } catch (const Error& e) {
      err << "echcap: " << e.what() << "\n";
      return kUsage;
    }
  }

  CLI::App app{"Exact ECH capacities of four-dimensional model domains and the obstructions they give.",
               "echcap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--node-limit", o.node_limit, "Polygon search node cap (default 1e7, or ECHCAP_NODE_LIMIT)")
      ->check(CLI::PositiveNumber);
  app.add_option("--meta", o.meta_path, "Write run metadata (timestamps, argv) to this JSON file");

  auto formats = [&](CLI::App* sub, std::vector<std::string> allowed) {
    o.format = allowed.front();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  const std::string domain_help = "Domain, e.g. ball(1), ellipsoid(1,2), polydisk(1,1), toric(euclidean)";

  auto* caps = app.add_subcommand("capacities", "ECH capacities c_0..c_kmax (or full spectrum with --full)");
  caps->add_option("spec", o.spec, domain_help)->required();
  caps->add_option("--kmax", o.kmax, "Largest index");
  caps->add_flag("--full", o.full, "Full spectrum c~_1..c~_kmax (ellipsoids and balls)");

  auto* embed = app.add_subcommand("embed", "Capacity obstruction to embedding INNER into OUTER");
  embed->add_option("inner", o.inner, "Inner domain")->required();
  embed->add_option("outer", o.outer, "Outer domain")->required();
  embed->add_option("--kmax", o.kmax, "Largest index compared");
  embed->add_option("--mode", o.mode, "weak: c_k <= c_k; strict: c_k < c_k")
      ->check(CLI::IsMember({"weak", "strict"}));

  auto* fb = app.add_subcommand("fbound", "Lower bound on the ellipsoid-into-ball function f(a)");
  fb->add_option("a", o.value, "a >= 1")->required();
  fb->add_option("--dmax", o.dmax, "Largest d in the supremum");

  auto* gb = app.add_subcommand("gbound", "Lower bound on the polydisk-into-ball function g(a)");
  gb->add_option("a", o.value, "a >= 1")->required();
  gb->add_option("--dmax", o.dmax, "Largest d in the supremum");

  auto* pack = app.add_subcommand("pack", "Packing inequalities for balls B(a_1),...,B(a_n) into B(1)");
  pack->add_option("a_list", o.list, "Comma-separated radii, e.g. 1/2,1/3")->required();
  pack->add_option("--dmax", o.dmax, "Largest d enumerated");

  auto* biran = app.add_subcommand("biran", "Sufficient conditions for a ball packing");
  biran->add_option("a_list", o.list, "Comma-separated radii")->required();
  biran->add_option("--dmax", o.dmax, "Largest d enumerated");

  auto* asym = app.add_subcommand("asym", "Trace of c_k^2 / (4 k vol)");
  asym->add_option("spec", o.spec, domain_help)->required();
  asym->add_option("--kmax", o.kmax, "Largest index");
  asym->add_option("--stride", o.stride, "Sampling stride")->check(CLI::PositiveNumber);

  auto* qw = app.add_subcommand("qw", "Check c_k < sqrt(2 k vol(Y)) for k = 1..kmax");
  qw->add_option("spec", o.spec, domain_help)->required();
  qw->add_option("--kmax", o.kmax, "Largest index");

  auto* wb = app.add_subcommand("weinstein", "sqrt(2 vol(Y)) compared with c_1");
  wb->add_option("spec", o.spec, domain_help)->required();

  formats(caps, {"text", "csv", "json"});
  formats(embed, {"json", "text"});
  formats(fb, {"text", "json"});
  formats(gb, {"text", "json"});
  formats(pack, {"text", "json"});
  formats(biran, {"text", "json"});
  formats(asym, {"csv", "json"});
  formats(qw, {"text", "json"});
  formats(wb, {"text", "json"});

  // Subcommands share these fields; reset them to the chosen command's defaults
  // before its own flags are read.
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->preparse_callback([&, sub](std::size_t) {
      const std::string n = sub->get_name();
      o.format = n == "embed" ? "json" : n == "asym" ? "csv" : "text";
      o.kmax = n == "embed" ? 50 : n == "asym" ? 10000 : n == "qw" ? 1000 : 10;
      o.dmax = n == "gbound" ? 6 : 10;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();
  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  std::ostringstream buf;
  int code = kOk;
  try {
    if (command == "capacities") code = cmd_capacities(o, buf);
    else if (command == "embed") code = cmd_embed(o, buf);
    else if (command == "fbound" || command == "gbound") code = cmd_bound(o, command, buf);
    else if (command == "pack") code = cmd_pack(o, buf);
    else if (command == "biran") code = cmd_biran(o, buf);
    else if (command == "asym") code = cmd_asym(o, buf);
    else if (command == "qw") code = cmd_qw(o, buf);
    else if (command == "weinstein") code = cmd_weinstein(o, buf);
  } catch (const SpecError& e) {
    err << "echcap: invalid domain spec at " << e.what() << "\n";
    code = kUsage;
  } catch (const ToricEnumerationBudgetExceeded& e) {
    err << "echcap: " << e.what() << " (raise --node-limit or ECHCAP_NODE_LIMIT)\n";
    code = kBudget;
  } catch (const ArithmeticOverflow& e) {
    err << "echcap: " << e.what() << "\n";
    code = kBudget;
  } catch (const ApproxTie& e) {
    err << "echcap: " << e.what() << "\n";
    code = kBudget;
  } catch (const Error& e) {
    err << "echcap: " << e.what() << "\n";
    code = kUsage;
  }
  if (code == kOk || code == kObstructed) out << buf.str() << std::flush;

  if (!o.meta_path.empty()) {
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_meta(o, args, command, started, seconds, code, err);
  }
  return code;
}

}  // namespace echcap::cli
