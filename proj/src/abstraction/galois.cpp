#include "interflow/abstraction/galois.hpp"

#include "interflow/core/errors.hpp"

#include <filesystem>

namespace interflow {

bool all_pass(const std::vector<law_result> &laws) {
  for (auto &l : laws)
    if (!l.ok)
      return false;
  return true;
}

std::string render_laws(const std::vector<law_result> &laws) {
  std::string s;
  for (auto &l : laws) {
    s += l.law + ": " + (l.ok ? "pass" : "FAIL");
    if (!l.ok && !l.witness.empty())
      s += " (" + l.witness + ")";
    s += "\n";
  }
  return s;
}

law_result check_galois(const galois_conn &c) {
  const auto &L = *c.concrete;
  const auto &A = *c.abstract;
  for (auto x : L.elements())
    for (auto y : A.elements())
      if (A.leq(c.a(x), y) != L.leq(x, c.g(y)))
        return {"adjunction", false, "x=" + L.name(x) + ", y=" + A.name(y)};
  return {"adjunction", true, ""};
}

std::vector<law_result> galois_laws(const galois_conn &c) {
  const auto &L = *c.concrete;
  const auto &A = *c.abstract;
  std::vector<law_result> r{check_galois(c)};
  auto check = [&](const std::string &name, auto &&pred) {
    law_result lr{name, true, ""};
    pred(lr);
    r.push_back(lr);
  };
  check("alpha monotone", [&](law_result &lr) {
    for (auto x : L.elements())
      for (auto y : L.elements())
        if (lr.ok && L.leq(x, y) && !A.leq(c.a(x), c.a(y)))
          lr = {lr.law, false, L.name(x) + " <= " + L.name(y)};
  });
  check("gamma monotone", [&](law_result &lr) {
    for (auto x : A.elements())
      for (auto y : A.elements())
        if (lr.ok && A.leq(x, y) && !L.leq(c.g(x), c.g(y)))
          lr = {lr.law, false, A.name(x) + " <= " + A.name(y)};
  });
  check("alpha.gamma <= id", [&](law_result &lr) {
    for (auto y : A.elements())
      if (lr.ok && !A.leq(c.a(c.g(y)), y))
        lr = {lr.law, false, "y=" + A.name(y)};
  });
  check("gamma.alpha >= id", [&](law_result &lr) {
    for (auto x : L.elements())
      if (lr.ok && !L.leq(x, c.g(c.a(x))))
        lr = {lr.law, false, "x=" + L.name(x)};
  });
  check("alpha.gamma.alpha = alpha", [&](law_result &lr) {
    for (auto x : L.elements())
      if (lr.ok && c.a(c.g(c.a(x))) != c.a(x))
        lr = {lr.law, false, "x=" + L.name(x)};
  });
  check("gamma.alpha.gamma = gamma", [&](law_result &lr) {
    for (auto y : A.elements())
      if (lr.ok && c.g(c.a(c.g(y))) != c.g(y))
        lr = {lr.law, false, "y=" + A.name(y)};
  });
  return r;
}

bool alpha_gamma_is_id(const galois_conn &c) {
  for (auto y : c.abstract->elements())
    if (c.a(c.g(y)) != y)
      return false;
  return true;
}

std::vector<element> derive_gamma(const std::vector<element> &alpha, const lattice_ptr &l,
                                  const lattice_ptr &abs) {
  if (alpha.size() != l->size())
    throw error(error_kind::parse_error, "alpha table is not total");
  if (alpha[l->bottom().index] != abs->bottom())
    throw error(error_kind::not_universally_distributive, "alpha(bottom) is not bottom");
  for (auto x : l->elements())
    for (auto y : l->elements())
      if (alpha[l->join(x, y).index] != abs->join(alpha[x.index], alpha[y.index]))
        throw error(error_kind::not_universally_distributive,
                    "alpha(" + l->name(x) + " join " + l->name(y) + ") differs");
  std::vector<element> gamma;
  for (auto y : abs->elements()) {
    element acc = l->bottom();
    for (auto x : l->elements())
      if (abs->leq(alpha[x.index], y))
        acc = l->join(acc, x);
    gamma.push_back(acc);
  }
  return gamma;
}

std::vector<law_result> closure_laws(const tabulated_fn &h) {
  const auto &L = *h.carrier();
  law_result ext{"extensive", true, ""}, mono{"monotone", true, ""}, idem{"idempotent", true, ""};
  for (auto x : L.elements()) {
    if (ext.ok && !L.leq(x, h(x)))
      ext = {ext.law, false, "x=" + L.name(x)};
    if (idem.ok && h(h(x)) != h(x))
      idem = {idem.law, false, "x=" + L.name(x)};
    for (auto y : L.elements())
      if (mono.ok && L.leq(x, y) && !L.leq(h(x), h(y)))
        mono = {mono.law, false, L.name(x) + " <= " + L.name(y)};
  }
  return {ext, mono, idem};
}

galois_conn closure_to_galois(const tabulated_fn &h) {
  for (auto &l : closure_laws(h))
    if (!l.ok)
      throw error(error_kind::not_a_closure, l.law + " fails at " + l.witness);
  const auto &L = h.carrier();
  std::vector<element> image;
  for (auto x : L->elements())
    if (h(x) == x)
      image.push_back(x);
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(image.size(), std::vector<bool>(image.size()));
  for (std::size_t i = 0; i < image.size(); ++i) {
    names.push_back(L->name(image[i]));
    for (std::size_t j = 0; j < image.size(); ++j)
      leq[i][j] = L->leq(image[i], image[j]);
  }
  galois_conn c;
  c.concrete = L;
  c.abstract = finite_lattice::from_order(names, leq);
  for (auto x : L->elements())
    c.alpha.push_back(c.abstract->find(L->name(h(x))));
  for (auto m : image)
    c.gamma.push_back(m);
  return c;
}

galois_conn load_galois(const lattice_spec &spec, const std::string &base_dir) {
  if (spec.abstract_path.empty())
    throw error(error_kind::missing_abstraction, "lattice spec has no 'abstract:' line");
  auto path = std::filesystem::path(base_dir) / spec.abstract_path;
  return make_galois(spec, load_lattice_spec(path.string()));
}

galois_conn make_galois(const lattice_spec &spec, const lattice_spec &abs) {
  galois_conn c;
  c.concrete = spec.lattice;
  c.abstract = abs.lattice;
  std::vector<int> a(c.concrete->size(), -1);
  for (auto &[x, y] : spec.alpha) {
    auto ex = c.concrete->find(x);
    if (a[ex.index] >= 0)
      throw error(error_kind::parse_error, "alpha maps '" + x + "' twice");
    a[ex.index] = static_cast<int>(c.abstract->find(y).index);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0)
      throw error(error_kind::parse_error, "alpha misses '" + c.concrete->names()[i] + "'");
    c.alpha.push_back({static_cast<std::uint32_t>(a[i])});
  }
  if (spec.gamma.empty()) {
    c.gamma = derive_gamma(c.alpha, c.concrete, c.abstract);
  } else {
    std::vector<int> g(c.abstract->size(), -1);
    for (auto &[y, x] : spec.gamma)
      g[c.abstract->find(y).index] = static_cast<int>(c.concrete->find(x).index);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] < 0)
        throw error(error_kind::parse_error, "gamma misses '" + c.abstract->names()[i] + "'");
      c.gamma.push_back({static_cast<std::uint32_t>(g[i])});
    }
  }
  return c;
}

std::vector<law_result> lattice_laws(const finite_lattice &l) {
  law_result comm{"join commutative", true, ""}, assoc{"join associative", true, ""},
      idem{"join idempotent", true, ""}, order{"a <= b iff a join b = b", true, ""},
      lub{"join is least upper bound", true, ""}, bounds{"bottom/top", true, ""};
  auto es = l.elements();
  for (auto a : es) {
    if (idem.ok && l.join(a, a) != a)
      idem = {idem.law, false, l.name(a)};
    if (bounds.ok && (!l.leq(l.bottom(), a) || !l.leq(a, l.top())))
      bounds = {bounds.law, false, l.name(a)};
    for (auto b : es) {
      if (comm.ok && l.join(a, b) != l.join(b, a))
        comm = {comm.law, false, l.name(a) + "," + l.name(b)};
      if (order.ok && l.leq(a, b) != (l.join(a, b) == b))
        order = {order.law, false, l.name(a) + "," + l.name(b)};
      for (auto c : es) {
        if (assoc.ok && l.join(l.join(a, b), c) != l.join(a, l.join(b, c)))
          assoc = {assoc.law, false, l.name(a) + "," + l.name(b) + "," + l.name(c)};
        if (lub.ok && l.leq(a, c) && l.leq(b, c) && !l.leq(l.join(a, b), c))
          lub = {lub.law, false, l.name(a) + "," + l.name(b) + "," + l.name(c)};
      }
    }
  }
  return {comm, assoc, idem, order, lub, bounds};
}

tabulated_fn canonical_abstraction(const tabulated_fn &f, const galois_conn &c) {
  if (f.carrier() != c.concrete)
    throw error(error_kind::carrier_mismatch, "function is not over the concrete lattice");
  std::vector<element> t;
  for (auto y : c.abstract->elements())
    t.push_back(c.a(f(c.g(y))));
  return {c.abstract, t};
}

abstract_interp canonical_interp(const galois_conn &c, const fn_table &fns) {
  abstract_interp ai{c, {}};
  for (auto &[n, f] : fns)
    ai.fsharp.emplace(n, canonical_abstraction(f, c));
  return ai;
}

const char *interp_class_name(interp_class k) {
  switch (k) {
  case interp_class::precise: return "precise";
  case interp_class::correct: return "correct";
  case interp_class::neither: return "neither";
  }
  return "?";
}

classification classify_interp(const abstract_interp &ai, const fn_table &fns) {
  classification r;
  const auto &c = ai.conn;
  for (auto &[n, f] : fns) {
    auto it = ai.fsharp.find(n);
    if (it == ai.fsharp.end())
      throw error(error_kind::missing_abstraction, "no abstract counterpart for '" + n + "'");
    for (auto x : c.concrete->elements()) {
      auto lhs = c.a(f(x)), rhs = it->second(c.a(x));
      if (lhs == rhs)
        continue;
      std::string w = n + " at " + c.concrete->name(x) + ": alpha(f(x))=" + c.abstract->name(lhs) +
                      ", f#(alpha(x))=" + c.abstract->name(rhs);
      if (!c.abstract->leq(lhs, rhs))
        return {interp_class::neither, w};
      if (r.cls == interp_class::precise)
        r = {interp_class::correct, w};
    }
  }
  return r;
}

constraint_system<finite_domain> to_constraint_system(const fn_system &s) {
  constraint_system<finite_domain> sys(finite_domain{s.lattice}, s.vars, "x");
  for (auto &c : s.cons) {
    if (!c.arg) {
      sys.add_constant(c.lhs, c.constant, s.lattice->name(c.constant));
    } else if (c.fn.empty()) {
      auto a = *c.arg;
      sys.add(
          c.lhs, {a}, [a](const assignment<element> &x) { return x[a]; },
          "x[" + s.vars[a] + "]");
    } else {
      auto it = s.fns.find(c.fn);
      if (it == s.fns.end())
        throw error(error_kind::missing_abstraction, "no function named '" + c.fn + "'");
      auto f = it->second;
      auto a = *c.arg;
      sys.add(
          c.lhs, {a}, [f, a](const assignment<element> &x) { return f(x[a]); },
          c.fn + "(x[" + s.vars[a] + "])");
    }
  }
  return sys;
}

fn_system abstract_system(const fn_system &s, const abstract_interp &ai) {
  fn_system out;
  out.lattice = ai.conn.abstract;
  out.vars = s.vars;
  for (auto &c : s.cons) {
    fn_constraint ac = c;
    if (!c.arg) {
      ac.constant = ai.conn.a(c.constant);
    } else if (!c.fn.empty()) {
      auto it = ai.fsharp.find(c.fn);
      if (it == ai.fsharp.end())
        throw error(error_kind::missing_abstraction, "no abstract counterpart for '" + c.fn + "'");
      out.fns.emplace(c.fn, it->second);
    }
    out.cons.push_back(ac);
  }
  return out;
}

lifted_interp lift_interproc_interp(const abstract_interp &ai, element concrete_init) {
  return {ai.conn.abstract, ai.fsharp, ai.conn.a(concrete_init)};
}

} // namespace interflow
