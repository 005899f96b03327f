#include "interflow/affine/polyhedron.hpp"

#include "interflow/core/errors.hpp"

#include <algorithm>
#include <utility>

namespace interflow {

namespace {

struct gen {
  rvec v;
  std::vector<bool> sat;
};

struct cone {
  std::vector<rvec> lines, rays;
};

rvec unit(std::size_t m, std::size_t i) {
  rvec v(m, rational(0));
  v[i] = 1;
  return v;
}

// a - k b
rvec sub_scaled(const rvec &a, const rational &k, const rvec &b) {
  rvec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= k * b[i];
  return r;
}

bool subset(const std::vector<bool> &s, const std::vector<bool> &t) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] && !t[i])
      return false;
  return true;
}

// double description: generators of {x in R^m | c.x >= 0 / c.x = 0}
cone dd(std::size_t m, const std::vector<std::pair<rvec, bool>> &cs) {
  std::vector<rvec> lines;
  for (std::size_t i = 0; i < m; ++i)
    lines.push_back(unit(m, i));
  std::vector<gen> rays;
  std::size_t K = cs.size();
  for (std::size_t k = 0; k < K; ++k) {
    const auto &[c, eq] = cs[k];
    std::size_t li = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (sgn(dot(c, lines[i])) != 0) {
        li = i;
        break;
      }
    if (li < lines.size()) {
      rvec l = lines[li];
      rational cl = dot(c, l);
      if (sgn(cl) < 0) {
        for (auto &x : l)
          x = -x;
        cl = -cl;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto &o : lines) {
        rational d = dot(c, o);
        if (sgn(d) != 0) {
          o = sub_scaled(o, d / cl, l);
          make_primitive(o);
        }
      }
      for (auto &r : rays) {
        rational d = dot(c, r.v);
        if (sgn(d) != 0) {
          r.v = sub_scaled(r.v, d / cl, l);
          make_primitive(r.v);
        }
        r.sat[k] = true;
      }
      if (!eq) {
        gen g{l, std::vector<bool>(K, false)};
        for (std::size_t j = 0; j < k; ++j)
          g.sat[j] = true;
        rays.push_back(std::move(g));
      }
      continue;
    }
    std::vector<std::size_t> pos, neg;
    std::vector<rational> val(rays.size());
    std::vector<gen> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(c, rays[i].v);
      int s = sgn(val[i]);
      if (s > 0)
        pos.push_back(i);
      else if (s < 0)
        neg.push_back(i);
      else {
        next.push_back(rays[i]);
        next.back().sat[k] = true;
      }
    }
    if (!eq)
      for (auto i : pos)
        next.push_back(rays[i]);
    for (auto i : pos)
      for (auto j : neg) {
        std::vector<bool> s(K);
        for (std::size_t t = 0; t < k; ++t)
          s[t] = rays[i].sat[t] && rays[j].sat[t];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != i && r != j && subset(s, rays[r].sat))
            adjacent = false;
        if (!adjacent)
          continue;
        rvec v(m);
        for (std::size_t t = 0; t < m; ++t)
          v[t] = val[i] * rays[j].v[t] - val[j] * rays[i].v[t];
        make_primitive(v);
        s[k] = true;
        next.push_back({std::move(v), std::move(s)});
      }
    rays = std::move(next);
  }
  cone out;
  out.lines = std::move(lines);
  for (auto &r : rays)
    out.rays.push_back(std::move(r.v));
  return out;
}

struct vrep {
  std::vector<rvec> points, rays, lines;
};

vrep h_to_v(std::size_t d, const std::vector<lin_constraint> &cons) {
  std::vector<std::pair<rvec, bool>> cs;
  cs.emplace_back(unit(d + 1, 0), false);
  for (auto &c : cons) {
    rvec h{-c.b};
    h.insert(h.end(), c.a.begin(), c.a.end());
    cs.emplace_back(std::move(h), c.eq);
  }
  auto k = dd(d + 1, cs);
  vrep v;
  for (auto &l : k.lines)
    v.lines.emplace_back(l.begin() + 1, l.end());
  for (auto &r : k.rays) {
    rvec x(r.begin() + 1, r.end());
    if (sgn(r[0]) > 0) {
      for (auto &q : x)
        q /= r[0];
      v.points.push_back(std::move(x));
    } else {
      make_primitive(x);
      v.rays.push_back(std::move(x));
    }
  }
  return v;
}

std::vector<lin_constraint> v_to_h(std::size_t d, const vrep &g) {
  std::vector<std::pair<rvec, bool>> cs;
  for (auto &p : g.points) {
    rvec h{rational(1)};
    h.insert(h.end(), p.begin(), p.end());
    cs.emplace_back(std::move(h), false);
  }
  for (auto &r : g.rays) {
    rvec h{rational(0)};
    h.insert(h.end(), r.begin(), r.end());
    cs.emplace_back(std::move(h), false);
  }
  for (auto &l : g.lines) {
    rvec h{rational(0)};
    h.insert(h.end(), l.begin(), l.end());
    cs.emplace_back(std::move(h), true);
  }
  auto k = dd(d + 1, cs);
  std::vector<lin_constraint> out;
  auto emit = [&](const rvec &c, bool eq) {
    rvec a(c.begin() + 1, c.end());
    if (is_zero(a))
      return;
    out.push_back({a, -c[0], eq});
  };
  for (auto &l : k.lines)
    emit(l, true);
  for (auto &r : k.rays)
    emit(r, false);
  return out;
}

// reduced row echelon form over the first `cols` columns; returns pivot columns
std::vector<std::size_t> rref(std::vector<rvec> &rows, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    rational inv = 1 / rows[r][c];
    for (auto &x : rows[r])
      x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && sgn(rows[i][c]) != 0)
        rows[i] = sub_scaled(rows[i], rows[i][c], rows[r]);
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

void reduce(rvec &v, const std::vector<rvec> &rows, const std::vector<std::size_t> &piv) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (sgn(v[piv[i]]) != 0)
      v = sub_scaled(v, v[piv[i]], rows[i]);
}

void check_dim(std::size_t d) {
  if (d > max_poly_dim)
    throw error(error_kind::dimension_too_large,
                "polyhedra are limited to dimension " + std::to_string(max_poly_dim) + ", got " +
                    std::to_string(d));
}

void check_size(const rvec &v, std::size_t d) {
  if (v.size() != d)
    throw error(error_kind::dimension_mismatch,
                "vector of size " + std::to_string(v.size()) + " in dimension " + std::to_string(d));
}

std::string render_point(const rvec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

} // namespace

polyhedron polyhedron::empty(std::size_t d) {
  check_dim(d);
  polyhedron p;
  p.m_dim = d;
  return p;
}

polyhedron polyhedron::universe(std::size_t d) {
  check_dim(d);
  polyhedron p;
  p.m_dim = d;
  p.m_empty = false;
  p.m_points.push_back(rvec(d, rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    p.m_lines.push_back(unit(d, i));
  return p;
}

polyhedron polyhedron::point(const rvec &x) { return from_generators(x.size(), {x}); }

polyhedron polyhedron::from_generators(std::size_t d, std::vector<rvec> points,
                                       std::vector<rvec> rays, std::vector<rvec> lines) {
  check_dim(d);
  for (auto *vs : {&points, &rays, &lines})
    for (auto &v : *vs) {
      check_size(v, d);
      interflow::canonicalize(v);
    }
  if (points.empty())
    return empty(d);
  std::erase_if(rays, [](const rvec &r) { return is_zero(r); });
  std::erase_if(lines, [](const rvec &r) { return is_zero(r); });
  polyhedron p;
  p.m_dim = d;
  p.m_empty = false;
  p.m_cons = v_to_h(d, {points, rays, lines});
  auto v = h_to_v(d, p.m_cons);
  p.m_points = std::move(v.points);
  p.m_rays = std::move(v.rays);
  p.m_lines = std::move(v.lines);
  p.canonicalize();
  return p;
}

polyhedron polyhedron::from_constraints(std::size_t d, std::vector<lin_constraint> cs) {
  check_dim(d);
  for (auto &c : cs) {
    check_size(c.a, d);
    interflow::canonicalize(c.a);
    c.b.canonicalize();
    if (is_zero(c.a)) {
      bool ok = c.eq ? sgn(c.b) == 0 : sgn(c.b) <= 0;
      if (!ok)
        return empty(d);
    }
  }
  std::erase_if(cs, [](const lin_constraint &c) { return is_zero(c.a); });
  auto v = h_to_v(d, cs);
  if (v.points.empty())
    return empty(d);
  polyhedron p;
  p.m_dim = d;
  p.m_empty = false;
  p.m_cons = v_to_h(d, v);
  p.m_points = std::move(v.points);
  p.m_rays = std::move(v.rays);
  p.m_lines = std::move(v.lines);
  p.canonicalize();
  return p;
}

void polyhedron::canonicalize() {
  std::size_t d = m_dim;
  // equalities: RREF over [a | b]
  std::vector<rvec> eqs;
  std::vector<lin_constraint> ineqs;
  for (auto &c : m_cons) {
    if (c.eq) {
      rvec row = c.a;
      row.push_back(c.b);
      eqs.push_back(std::move(row));
    } else {
      ineqs.push_back(c);
    }
  }
  auto piv = rref(eqs, d);
  std::vector<lin_constraint> out;
  for (auto row : eqs) {
    make_primitive(row);
    out.push_back({rvec(row.begin(), row.begin() + d), row[d], true});
  }
  std::vector<lin_constraint> ins;
  for (auto &c : ineqs) {
    rvec row = c.a;
    row.push_back(c.b);
    reduce(row, eqs, piv);
    if (std::all_of(row.begin(), row.begin() + d, [](const rational &x) { return sgn(x) == 0; }))
      continue; // implied by the equalities
    make_primitive(row);
    ins.push_back({rvec(row.begin(), row.begin() + d), row[d], false});
  }
  std::sort(ins.begin(), ins.end(),
            [](const lin_constraint &x, const lin_constraint &y) {
              return x.a != y.a ? x.a < y.a : x.b < y.b;
            });
  ins.erase(std::unique(ins.begin(), ins.end()), ins.end());
  out.insert(out.end(), ins.begin(), ins.end());
  m_cons = std::move(out);

  auto lpiv = rref(m_lines, d);
  for (auto &l : m_lines)
    make_primitive(l);
  std::vector<rvec> lrows = m_lines;
  for (std::size_t i = 0; i < lrows.size(); ++i) {
    rational inv = 1 / lrows[i][lpiv[i]];
    for (auto &x : lrows[i])
      x *= inv;
  }
  for (auto &p : m_points)
    reduce(p, lrows, lpiv);
  for (auto &r : m_rays) {
    reduce(r, lrows, lpiv);
    make_primitive(r);
  }
  for (auto *vs : {&m_points, &m_rays, &m_lines}) {
    std::sort(vs->begin(), vs->end());
    vs->erase(std::unique(vs->begin(), vs->end()), vs->end());
  }
}

bool polyhedron::contains(const rvec &point) const {
  check_size(point, m_dim);
  if (m_empty)
    return false;
  rvec x = point;
  interflow::canonicalize(x);
  for (auto &c : m_cons) {
    rational v = dot(c.a, x);
    if (c.eq ? v != c.b : v < c.b)
      return false;
  }
  return true;
}

bool polyhedron::subset_of(const polyhedron &q) const {
  if (m_dim != q.m_dim)
    throw error(error_kind::dimension_mismatch, "polyhedra of different dimension");
  if (m_empty)
    return true;
  if (q.m_empty)
    return false;
  for (auto &p : m_points)
    if (!q.contains(p))
      return false;
  for (auto &c : q.m_cons) {
    for (auto &r : m_rays) {
      int s = sgn(dot(c.a, r));
      if (c.eq ? s != 0 : s < 0)
        return false;
    }
    for (auto &l : m_lines)
      if (sgn(dot(c.a, l)) != 0)
        return false;
  }
  return true;
}

std::string polyhedron::str(const std::vector<std::string> &names) const {
  if (m_empty)
    return "empty";
  if (m_cons.empty())
    return "universe";
  std::string s;
  for (std::size_t k = 0; k < m_cons.size(); ++k) {
    const auto &c = m_cons[k];
    if (k)
      s += "; ";
    bool first = true;
    for (std::size_t i = 0; i < m_dim; ++i) {
      if (sgn(c.a[i]) == 0)
        continue;
      if (!first)
        s += " + ";
      first = false;
      s += c.a[i].get_str() + "*" + (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    }
    s += (c.eq ? " = " : " >= ") + c.b.get_str();
  }
  return s;
}

std::string polyhedron::generators_str() const {
  if (m_empty)
    return "empty";
  auto list = [](const std::vector<rvec> &vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i)
      s += (i ? ", " : "") + render_point(vs[i]);
    return s + "}";
  };
  std::string s = "points " + list(m_points);
  if (!m_rays.empty())
    s += " rays " + list(m_rays);
  if (!m_lines.empty())
    s += " lines " + list(m_lines);
  return s;
}

polyhedron poly_join(const polyhedron &p, const polyhedron &q) {
  if (p.dim() != q.dim())
    throw error(error_kind::dimension_mismatch, "polyhedra of different dimension");
  if (p.is_empty())
    return q;
  if (q.is_empty())
    return p;
  auto pts = p.points(), rays = p.rays(), lines = p.lines();
  pts.insert(pts.end(), q.points().begin(), q.points().end());
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  lines.insert(lines.end(), q.lines().begin(), q.lines().end());
  return polyhedron::from_generators(p.dim(), pts, rays, lines);
}

bool poly_include(const polyhedron &p, const polyhedron &q) { return p.subset_of(q); }

bool poly_equal(const polyhedron &p, const polyhedron &q) { return p == q; }

polyhedron poly_intersect(const polyhedron &p, const polyhedron &q) {
  if (p.dim() != q.dim())
    throw error(error_kind::dimension_mismatch, "polyhedra of different dimension");
  if (p.is_empty() || q.is_empty())
    return polyhedron::empty(p.dim());
  auto cs = p.constraints();
  cs.insert(cs.end(), q.constraints().begin(), q.constraints().end());
  return polyhedron::from_constraints(p.dim(), cs);
}

polyhedron affine_image(const polyhedron &p, const std::vector<rvec> &m, const rvec &b) {
  std::size_t d2 = m.size();
  check_size(b, d2);
  for (auto &row : m)
    check_size(row, p.dim());
  if (p.is_empty())
    return polyhedron::empty(d2);
  auto lin = [&](const rvec &x) {
    rvec y(d2, rational(0));
    for (std::size_t i = 0; i < d2; ++i)
      y[i] = dot(m[i], x);
    return y;
  };
  std::vector<rvec> pts, rays, lines;
  for (auto &x : p.points()) {
    auto y = lin(x);
    for (std::size_t i = 0; i < d2; ++i)
      y[i] += b[i];
    pts.push_back(std::move(y));
  }
  for (auto &r : p.rays())
    rays.push_back(lin(r));
  for (auto &l : p.lines())
    lines.push_back(lin(l));
  return polyhedron::from_generators(d2, pts, rays, lines);
}

polyhedron project(const polyhedron &p, const std::vector<std::size_t> &keep) {
  std::vector<rvec> m;
  for (auto i : keep) {
    if (i >= p.dim())
      throw error(error_kind::index_out_of_range, "projection coordinate out of range");
    m.push_back(unit(p.dim(), i));
  }
  return affine_image(p, m, rvec(keep.size(), rational(0)));
}

polyhedron lift(const polyhedron &p, std::size_t d, std::size_t offset) {
  if (offset + p.dim() > d)
    throw error(error_kind::dimension_mismatch, "lift target too small");
  if (p.is_empty())
    return polyhedron::empty(d);
  std::vector<lin_constraint> cs;
  for (auto &c : p.constraints()) {
    rvec a(d, rational(0));
    std::copy(c.a.begin(), c.a.end(), a.begin() + static_cast<std::ptrdiff_t>(offset));
    cs.push_back({a, c.b, c.eq});
  }
  return polyhedron::from_constraints(d, cs);
}

polyhedron relation_apply(const polyhedron &r, const polyhedron &s) {
  std::size_t n = s.dim();
  if (r.dim() != 2 * n)
    throw error(error_kind::dimension_mismatch, "relation and state dimensions differ");
  auto both = poly_intersect(r, lift(s, 2 * n, 0));
  std::vector<std::size_t> keep;
  for (std::size_t i = n; i < 2 * n; ++i)
    keep.push_back(i);
  return project(both, keep);
}

polyhedron relation_compose(const polyhedron &r2, const polyhedron &r1) {
  if (r1.dim() != r2.dim() || r1.dim() % 2 != 0)
    throw error(error_kind::dimension_mismatch, "relations of different dimension");
  std::size_t n = r1.dim() / 2;
  auto both = poly_intersect(lift(r1, 3 * n, 0), lift(r2, 3 * n, n));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    keep.push_back(i);
  for (std::size_t i = 2 * n; i < 3 * n; ++i)
    keep.push_back(i);
  return project(both, keep);
}

} // namespace interflow
