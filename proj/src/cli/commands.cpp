#include "interflow/cli/commands.hpp"

#include "interflow/abstraction/galois.hpp"
#include "interflow/affine/frameworks.hpp"
#include "interflow/core/errors.hpp"
#include "interflow/core/text.hpp"
#include "interflow/interproc/generators.hpp"
#include "interflow/mop/paths.hpp"
#include "interflow/solver/solver.hpp"
#include "interflow/widening/kits.hpp"
#include "interflow/widening/widening.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

namespace interflow::cli {

report::entries &report::section(const std::string &name) {
  for (auto &[n, e] : sections)
    if (n == name)
      return e;
  sections.emplace_back(name, entries{});
  return sections.back().second;
}

std::string report::text() const {
  std::ostringstream out;
  for (auto &[k, v] : fields)
    out << k << ": " << v << "\n";
  for (auto &[name, es] : sections) {
    out << "[" << name << "]\n";
    for (auto &[k, v] : es)
      out << k << " = " << v << "\n";
  }
  if (!trace.empty()) {
    out << "[trace]\n";
    for (auto &t : trace)
      out << t << "\n";
  }
  return out.str();
}

std::string report::json() const {
  nlohmann::ordered_json j;
  for (auto &[k, v] : fields)
    j[k] = v;
  for (auto &[name, es] : sections) {
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (auto &[k, v] : es)
      s[k] = v;
    j["sections"][name] = s;
  }
  if (!trace.empty())
    j["trace"] = trace;
  return j.dump(2) + "\n";
}

namespace {

void emit(const report &r, const std::string &format, std::ostream &out) {
  if (format == "json")
    out << r.json();
  else
    out << r.text();
}

void check_format(const std::string &f) {
  if (f != "text" && f != "json")
    throw error(error_kind::usage, "--format must be text or json");
}

strategy parse_strategy(const std::string &s) {
  if (s == "fifo")
    return strategy::fifo();
  if (s == "lifo")
    return strategy::lifo();
  if (s == "fair")
    return strategy::fair();
  if (text::starts_with(s, "script:"))
    return strategy::scripted(parse_script(text::read_file(s.substr(7))));
  throw error(error_kind::usage, "unknown strategy '" + s + "'");
}

// ids T* go to the summary system, the rest to the value system
strategy restrict_script(const strategy &s, bool summaries) {
  if (s.kind != strategy_kind::scripted)
    return s;
  std::vector<std::string> ids;
  for (auto &id : s.script)
    if (text::starts_with(id, "T") == summaries)
      ids.push_back(id);
  return strategy::scripted(ids);
}

template <class D>
void put_values(report &r, const std::string &sec, const constraint_system<D> &sys,
                const assignment<typename D::value_type> &a) {
  auto &s = r.section(sec);
  for (var_id i = 0; i < sys.size(); ++i)
    s.emplace_back(sys.var_label(i), sys.domain().render(a[i]));
}

template <class D>
auto solve_phase(report &r, const std::string &phase, const constraint_system<D> &sys,
                 const std::optional<widen_fn<typename D::value_type>> &w, const strategy &st,
                 std::size_t budget, bool trace) {
  auto o = w ? solve_widening(sys, *w, st, budget, true)
             : solve_workset(sys, st, budget, nullptr, true);
  r.field(phase + ".status", o.diverged ? "Diverged" : "Solution");
  r.field(phase + ".steps", std::to_string(o.steps));
  if (trace || o.diverged)
    for (auto &t : o.trace)
      r.trace.push_back(phase + " " + t.line());
  return o;
}

struct run_cfg {
  strategy strat;
  std::size_t budget;
  bool trace;
  std::optional<std::size_t> cs_bound;
};

template <class VF, class SF, class Apply>
int run_functional(report &r, const program &prog, const VF &vf, const SF &sf, Apply apply,
                   const vf_value<VF> &init,
                   const std::optional<widen_fn<vf_value<SF>>> &ws,
                   const std::optional<widen_fn<vf_value<VF>>> &wv, const run_cfg &c) {
  auto tsys = gen_functional_T(prog, sf);
  auto t = solve_phase(r, "T", tsys, ws, restrict_script(c.strat, true), c.budget, c.trace);
  put_values(r, "T", tsys, t.values);
  if (t.diverged)
    return exit_diverged;
  auto sums = end_summaries(prog, tsys, t.values);
  auto rsys = gen_functional_R(prog, vf, sums, apply, init);
  auto o = solve_phase(r, "R", rsys, wv, restrict_script(c.strat, false), c.budget, c.trace);
  put_values(r, "R", rsys, o.values);
  return o.diverged ? exit_diverged : exit_ok;
}

// value-only functional run for programs without calls
template <class VF>
int run_intraproc(report &r, const program &prog, const VF &vf, const vf_value<VF> &init,
                  const std::optional<widen_fn<vf_value<VF>>> &wv, const run_cfg &c) {
  using V = vf_value<VF>;
  if (!prog.call_edges().empty())
    throw error(error_kind::unsupported_carrier,
                "summaries over this domain are not supported; use --approach callstring");
  std::map<std::string, V> none;
  auto rsys = gen_functional_R(
      prog, vf, none, [](const V &t, const V &) { return t; }, init);
  auto o = solve_phase(r, "R", rsys, wv, c.strat, c.budget, c.trace);
  put_values(r, "R", rsys, o.values);
  return o.diverged ? exit_diverged : exit_ok;
}

template <class VF>
int run_callstring(report &r, const program &prog, const VF &vf, const vf_value<VF> &init,
                   const std::optional<widen_fn<vf_value<VF>>> &wv, const run_cfg &c) {
  auto cs = compute_callstrings(prog, c.cs_bound);
  r.field("callstrings", cs.exact ? "exact" : "truncated");
  auto asys = gen_callstring_A(prog, vf, cs, init);
  auto o = solve_phase(r, "A", asys, wv, c.strat, c.budget, c.trace);
  put_values(r, "A", asys, o.values);
  auto merged = merge_A(prog, cs, asys, o.values);
  auto &s = r.section("A^");
  for (auto &n : prog.all_nodes())
    s.emplace_back("A^[" + n + "]", asys.domain().render(merged.at(n)));
  return o.diverged ? exit_diverged : exit_ok;
}

int analyze_finite(report &r, const program &prog, const analyze_options &o, const run_cfg &c) {
  auto spec = load_lattice_spec(o.lattice);
  auto l = spec.lattice;
  auto fns = fn_table_of(spec);
  element init = spec.init ? *spec.init : l->top();
  r.field("init", l->name(init));
  std::optional<widening_op> op;
  if (o.widening == "table")
    op = widening_op::of_spec(spec);
  else if (o.widening == "idp")
    op = idp_wrap(widening_op::of_spec(spec));
  else if (o.widening == "join")
    op = widening_op::join(l);
  else if (!o.widening.empty())
    throw error(error_kind::usage, "lattice widenings are table, idp or join");
  std::optional<widen_fn<element>> wv;
  std::optional<widen_fn<tabulated_fn>> ws;
  if (op) {
    wv = [w = *op](element a, element b) { return w(a, b); };
    ws = lift_widen(*op);
  }
  finite_value_fw vf(l, fns);
  if (o.approach == "functional") {
    finite_summary_fw sf(l, fns);
    return run_functional(
        r, prog, vf, sf, [](const tabulated_fn &t, element x) { return t(x); }, init, ws, wv, c);
  }
  if (o.approach == "callstring")
    return run_callstring(r, prog, vf, init, wv, c);
  if (op)
    throw error(error_kind::usage, "--approach mop takes no widening");
  path_enumerator pe(prog, 64);
  r.field("mop", pe.complete() ? "complete" : "incomplete");
  auto &s = r.section("MOP");
  for (auto &n : prog.all_nodes())
    s.emplace_back("MOP[" + n + "]", l->name(mop(prog, pe, l, fns, init, n).value));
  return pe.complete() ? exit_ok : exit_diverged;
}

int analyze_interval(report &r, const program &prog, const analyze_options &o,
                     const run_cfg &c) {
  interval_value_fw vf(prog.vars());
  auto init = vf.domain().top();
  r.field("init", vf.domain().render(init));
  std::optional<widen_fn<interval_env>> wv;
  if (o.widening == "interval")
    wv = env_widen;
  else if (o.widening == "idp")
    wv = idp_wrap(vf.domain(), env_widen);
  else if (!o.widening.empty())
    throw error(error_kind::usage, "interval widenings are interval or idp");
  if (o.approach == "functional")
    return run_intraproc(r, prog, vf, init, wv, c);
  if (o.approach == "callstring")
    return run_callstring(r, prog, vf, init, wv, c);
  throw error(error_kind::usage, "--approach mop needs a finite lattice");
}

std::vector<rvec> parse_points(const std::string &s, std::size_t n) {
  std::vector<rvec> pts;
  for (auto item : text::split(s, ';')) {
    item = text::trim(item);
    if (item.empty())
      continue;
    auto body = item;
    if (body.front() == '(' && body.back() == ')')
      body = body.substr(1, body.size() - 2);
    rvec p;
    for (auto &x : text::split(body, ','))
      p.push_back(parse_rational(x));
    if (p.size() != n)
      throw error(error_kind::dimension_mismatch,
                  "initial state '" + item + "' needs " + std::to_string(n) + " coordinates");
    pts.push_back(p);
  }
  if (pts.empty())
    throw error(error_kind::usage, "--init-states lists no states");
  return pts;
}

int analyze_affine(report &r, const program &prog, const analyze_options &o, const run_cfg &c) {
  if (!o.widening.empty())
    throw error(error_kind::usage, "affine domains take no widening");
  if (o.approach == "mop")
    throw error(error_kind::usage, "--approach mop needs a finite lattice");
  bool matrix = o.domain == "affine-matrix";
  std::size_t n = prog.vars().size();
  std::vector<rvec> pts =
      o.init_states.empty() ? std::vector<rvec>{} : parse_points(o.init_states, n);
  if (o.hull) {
    auto init = pts.empty() ? polyhedron::universe(n) : polyhedron::from_generators(n, pts);
    poly_value_fw vf(prog.vars());
    r.field("init", vf.domain().render(init));
    if (o.approach == "callstring")
      return run_callstring(r, prog, vf, init, std::nullopt, c);
    if (matrix) {
      hulled_matrix_fw sf(prog.vars());
      return run_functional(
          r, prog, vf, sf,
          [n](const polyhedron &t, const polyhedron &s) { return hulled_matrix_apply(t, s, n); },
          init, std::nullopt, std::nullopt, c);
    }
    hulled_relation_fw sf(prog.vars());
    return run_functional(
        r, prog, vf, sf,
        [](const polyhedron &t, const polyhedron &s) { return relation_apply(t, s); }, init,
        std::nullopt, std::nullopt, c);
  }
  state_set init;
  if (pts.empty())
    init.insert(embed(rvec(n, rational(0))));
  for (auto &p : pts)
    init.insert(embed(p));
  stateset_value_fw vf(prog.vars());
  r.field("init", vf.domain().render(init));
  if (o.approach == "callstring")
    return run_callstring(r, prog, vf, init, std::nullopt, c);
  if (matrix)
    return run_functional(
        r, prog, vf, exact_matrix_fw(prog.vars()),
        [](const mat_set &t, const state_set &s) { return apply_matset(t, s); }, init,
        std::nullopt, std::nullopt, c);
  return run_functional(
      r, prog, vf, exact_relation_fw(prog.vars()),
      [](const aff_relation &t, const state_set &s) { return apply_relation(t, s); }, init,
      std::nullopt, std::nullopt, c);
}

int fail_input(std::ostream &err, const std::exception &e) {
  err << "error: " << e.what() << "\n";
  return exit_input;
}

} // namespace

int cmd_analyze(const analyze_options &o, std::ostream &out, std::ostream &err) {
  try {
    check_format(o.format);
    if (o.lattice.empty() == o.domain.empty())
      throw error(error_kind::usage, "give exactly one of --lattice and --domain");
    if (o.approach != "functional" && o.approach != "callstring" && o.approach != "mop")
      throw error(error_kind::usage, "--approach must be functional, callstring or mop");
    auto prog = load_program(o.program);
    run_cfg c{parse_strategy(o.strategy), o.budget.value_or(default_budget()), o.trace,
              o.callstring_bound};
    report r;
    r.field("command", "analyze");
    r.field("program", o.program);
    r.field("domain", o.lattice.empty() ? o.domain : "lattice " + o.lattice);
    r.field("approach", o.approach);
    r.field("hull", o.hull ? "yes" : "no");
    r.field("widening", o.widening.empty() ? "none" : o.widening);
    r.field("strategy", o.strategy);
    r.field("budget", std::to_string(c.budget));
    int code;
    if (!o.lattice.empty()) {
      if (o.hull)
        throw error(error_kind::usage, "--hull applies to affine domains only");
      code = analyze_finite(r, prog, o, c);
    } else if (o.domain == "interval") {
      if (o.hull)
        throw error(error_kind::usage, "--hull applies to affine domains only");
      code = analyze_interval(r, prog, o, c);
    } else if (o.domain == "affine-matrix" || o.domain == "affine-relation") {
      code = analyze_affine(r, prog, o, c);
    } else {
      throw error(error_kind::usage, "unknown domain '" + o.domain + "'");
    }
    r.field("result", code == exit_ok ? "Solution" : "Diverged");
    emit(r, o.format, out);
    return code;
  } catch (const std::exception &e) {
    return fail_input(err, e);
  }
}

int cmd_check(const std::string &what, const std::string &file, const std::string &format,
              std::ostream &out, std::ostream &err) {
  report r;
  r.field("command", "check");
  r.field("what", what);
  r.field("file", file);
  auto laws_into = [&](const std::vector<law_result> &laws) {
    auto &s = r.section("laws");
    for (auto &l : laws)
      s.emplace_back(l.law, l.ok ? "pass" : "fail: " + l.witness);
    return all_pass(laws);
  };
  auto finish = [&](bool ok) {
    r.field("result", ok ? "pass" : "fail");
    emit(r, format, out);
    return ok ? exit_ok : exit_fail;
  };
  auto structural = [](error_kind k) {
    return k == error_kind::not_a_lattice || k == error_kind::not_a_partial_order ||
           k == error_kind::not_monotone || k == error_kind::not_universally_distributive;
  };
  try {
    check_format(format);
    if (what == "lattice") {
      auto spec = load_lattice_spec(file);
      bool ok = laws_into(lattice_laws(*spec.lattice));
      auto &s = r.section("functions");
      for (auto &[n, f] : spec.fns)
        s.emplace_back(n, std::string("monotone, ") + distributivity_name(check_distributivity(f)));
      return finish(ok);
    }
    if (what == "widening") {
      widening_report rep;
      if (file == "interval") {
        rep = validate_interval_widening();
      } else {
        auto spec = load_lattice_spec(file);
        auto op = widening_op::of_spec(spec);
        rep = validate_widening(op);
        bool sym = true;
        for (auto a : spec.lattice->elements())
          for (auto b : spec.lattice->elements())
            sym = sym && op(a, b) == op(b, a);
        r.field("idp-equal", idp_wrap(op) == op ? "yes" : "no");
        r.field("symmetric", sym ? "yes" : "no");
      }
      auto &s = r.section("laws");
      s.emplace_back("extrapolation", rep.extrapolation.ok ? "pass" : "fail: " + rep.extrapolation.witness);
      s.emplace_back("stabilization", rep.stabilization.ok ? "pass" : "fail: " + rep.stabilization.witness);
      s.emplace_back("monotone", rep.monotone ? "yes" : "no (" + rep.monotone_witness + ")");
      s.emplace_back("idempotent", rep.idempotent ? "yes" : "no (" + rep.idempotent_witness + ")");
      s.emplace_back("equals-join", rep.equals_join ? "yes" : "no");
      s.emplace_back("join-consistency", rep.join_consistent ? "pass" : "fail");
      return finish(rep.ok());
    }
    if (what == "galois") {
      auto spec = load_lattice_spec(file);
      auto dir = std::filesystem::path(file).parent_path().string();
      auto conn = load_galois(spec, dir.empty() ? "." : dir);
      bool ok = laws_into(galois_laws(conn));
      r.field("alpha-gamma-id", alpha_gamma_is_id(conn) ? "yes" : "no");
      auto fns = fn_table_of(spec);
      if (ok && !fns.empty()) {
        auto cls = classify_interp(canonical_interp(conn, fns), fns);
        r.field("canonical-interp", interp_class_name(cls.cls));
        if (!cls.witness.empty())
          r.field("witness", cls.witness);
      }
      return finish(ok);
    }
    throw error(error_kind::usage, "check takes lattice, widening or galois");
  } catch (const error &e) {
    if (structural(e.kind())) {
      r.section("laws").emplace_back(error_kind_name(e.kind()), std::string("fail: ") + e.what());
      return finish(false);
    }
    return fail_input(err, e);
  } catch (const std::exception &e) {
    return fail_input(err, e);
  }
}

int cmd_coincide(const coincide_options &o, std::ostream &out, std::ostream &err) {
  try {
    check_format(o.format);
    auto prog = load_program(o.program);
    auto spec = load_lattice_spec(o.lattice);
    auto fns = fn_table_of(spec);
    element init = spec.init ? *spec.init : spec.lattice->top();
    report r;
    r.field("command", "coincide");
    r.field("program", o.program);
    r.field("lattice", o.lattice);
    auto add_table = [&](const std::string &name, const coincidence_report &c) {
      auto &s = r.section(name);
      for (auto &n : c.nodes)
        s.emplace_back(n.node, c.lattice->name(n.mop) + " " + c.lattice->name(n.functional) + " " +
                                   c.lattice->name(n.callstring) + " " + n.verdict);
    };
    auto rep = check_coincidence(prog, spec.lattice, fns, init, o.max_len);
    r.field("distributivity", distributivity_name(rep.weakest));
    r.field("all-coincide", rep.all_coincide ? "yes" : "no");
    add_table("nodes (MOP R A verdict)", rep);
    bool ok = rep.matches_theory();
    if (!o.abstract_spec.empty()) {
      auto aspec = load_lattice_spec(o.abstract_spec);
      auto dir = std::filesystem::path(o.abstract_spec).parent_path().string();
      auto conn = load_galois(aspec, dir.empty() ? "." : dir);
      if (conn.concrete->names() != spec.lattice->names())
        throw error(error_kind::carrier_mismatch, "galois spec describes a different lattice");
      conn.concrete = spec.lattice;
      auto ai = canonical_interp(conn, fns);
      auto cls = classify_interp(ai, fns);
      auto lifted = lift_interproc_interp(ai, init);
      auto arep = check_coincidence(prog, lifted.lattice, lifted.fns, lifted.init, o.max_len);
      r.field("abstract.interp", interp_class_name(cls.cls));
      r.field("abstract.alpha-gamma-id", alpha_gamma_is_id(conn) ? "yes" : "no");
      r.field("abstract.distributivity", distributivity_name(arep.weakest));
      add_table("abstract nodes (MOP R A verdict)", arep);
      bool eq = true;
      for (auto &n : arep.nodes)
        eq = eq && n.functional == n.callstring;
      r.field("abstract.R=A", eq ? "yes" : "no");
      ok = ok && arep.matches_theory();
      if (cls.cls == interp_class::precise && alpha_gamma_is_id(conn))
        ok = ok && eq;
    }
    r.field("matches-theory", ok ? "yes" : "no");
    emit(r, o.format, out);
    return ok ? exit_ok : exit_fail;
  } catch (const error &e) {
    if (e.kind() == error_kind::incomplete_mop) {
      err << "error: " << e.what() << "\n";
      return exit_incomplete;
    }
    return fail_input(err, e);
  } catch (const std::exception &e) {
    return fail_input(err, e);
  }
}

int cmd_repro(const std::string &id, std::ostream &out, std::ostream &err) {
  repro_report rep;
  try {
    rep = repro(id);
  } catch (const error &e) {
    if (e.kind() == error_kind::usage)
      return fail_input(err, e);
    err << "error: " << e.what() << "\n";
    return exit_fail;
  }
  out << rep.render();
  if (!rep.pass()) {
    for (auto &c : rep.checks)
      if (!c.ok) {
        err << "mismatch: " << c.what << ": expected " << c.expected << ", got " << c.got << "\n";
        break;
      }
    return exit_fail;
  }
  return exit_ok;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Constraint-based interprocedural dataflow analysis", "interflow"};
  app.require_subcommand(1);

  analyze_options ao;
  auto *an = app.add_subcommand("analyze", "Solve the analysis of a program");
  an->add_option("--program", ao.program, "Program file")->required();
  an->add_option("--lattice", ao.lattice, "Finite lattice spec file");
  an->add_option("--domain", ao.domain, "interval | affine-matrix | affine-relation");
  an->add_option("--approach", ao.approach, "functional | callstring | mop");
  an->add_option("--widening", ao.widening, "table | idp | join | interval");
  an->add_option("--strategy", ao.strategy, "fifo | lifo | fair | script:<file>");
  std::size_t bound = 0;
  auto *bopt = an->add_option("--callstring-bound", bound, "Maximal call-string length");
  an->add_flag("--hull", ao.hull, "Convex-hull abstraction for affine domains");
  std::size_t budget = 0;
  auto *budopt = an->add_option("--budget", budget, "Solver step budget");
  an->add_option("--format", ao.format, "text | json");
  an->add_option("--seed", ao.seed, "Random seed");
  an->add_option("--init-states", ao.init_states, "Initial states, e.g. '(0,0);(1,2)'");
  an->add_flag("--trace", ao.trace, "Print the solver trace");

  std::string what, file, check_format_opt = "text";
  auto *ck = app.add_subcommand("check", "Validate a lattice, widening or Galois connection");
  ck->add_option("what", what, "lattice | widening | galois")->required();
  ck->add_option("file", file, "Spec file, or 'interval' for the interval widening")->required();
  ck->add_option("--format", check_format_opt, "text | json");

  std::string id;
  auto *rp = app.add_subcommand("repro", "Reproduce a worked example");
  rp->add_option("id", id, "Example id")->required();

  coincide_options co;
  auto *cc = app.add_subcommand("coincide", "Compare MOP, functional and call-string solutions");
  cc->add_option("--program", co.program, "Program file")->required();
  cc->add_option("--lattice", co.lattice, "Finite lattice spec file")->required();
  cc->add_option("--abstract", co.abstract_spec, "Galois connection spec file");
  cc->add_option("--max-len", co.max_len, "Path length bound for MOP enumeration");
  cc->add_option("--format", co.format, "text | json");
  std::uint64_t seed = 1;
  cc->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }
  if (*an) {
    if (*bopt)
      ao.callstring_bound = bound;
    if (*budopt)
      ao.budget = budget;
    return cmd_analyze(ao, out, err);
  }
  if (*ck)
    return cmd_check(what, file, check_format_opt, out, err);
  if (*rp)
    return cmd_repro(id, out, err);
  return cmd_coincide(co, out, err);
}

} // namespace interflow::cli
