#pragma once

#include "interflow/core/rational.hpp"

#include <string>
#include <vector>

namespace interflow {

inline constexpr std::size_t max_poly_dim = 6;

// a.x >= b, or a.x = b when eq
struct lin_constraint {
  rvec a;
  rational b;
  bool eq = false;
  friend bool operator==(const lin_constraint &, const lin_constraint &) = default;
};

// closed convex polyhedron in R^d, kept in both minimal representations
class polyhedron {
public:
  polyhedron() = default;

  static polyhedron empty(std::size_t d);
  static polyhedron universe(std::size_t d);
  static polyhedron point(const rvec &p);
  static polyhedron from_generators(std::size_t d, std::vector<rvec> points,
                                    std::vector<rvec> rays = {}, std::vector<rvec> lines = {});
  static polyhedron from_constraints(std::size_t d, std::vector<lin_constraint> cs);

  std::size_t dim() const { return m_dim; }
  bool is_empty() const { return m_empty; }
  bool is_universe() const { return !m_empty && m_cons.empty(); }

  const std::vector<lin_constraint> &constraints() const { return m_cons; }
  const std::vector<rvec> &points() const { return m_points; }
  const std::vector<rvec> &rays() const { return m_rays; }
  const std::vector<rvec> &lines() const { return m_lines; }

  bool contains(const rvec &x) const;
  // true iff this is a subset of q
  bool subset_of(const polyhedron &q) const;

  // constraints as "a1*x1 + ... >= b"; names default to x1..xd
  std::string str(const std::vector<std::string> &names = {}) const;
  std::string generators_str() const;

  friend bool operator==(const polyhedron &a, const polyhedron &b) {
    return a.m_dim == b.m_dim && a.m_empty == b.m_empty && a.m_cons == b.m_cons &&
           a.m_points == b.m_points && a.m_rays == b.m_rays && a.m_lines == b.m_lines;
  }

private:
  std::size_t m_dim = 0;
  bool m_empty = true;
  std::vector<lin_constraint> m_cons;
  std::vector<rvec> m_points, m_rays, m_lines;

  void canonicalize();
};

polyhedron poly_join(const polyhedron &p, const polyhedron &q); // closed convex hull
bool poly_include(const polyhedron &p, const polyhedron &q);     // p subset of q
bool poly_equal(const polyhedron &p, const polyhedron &q);
polyhedron poly_intersect(const polyhedron &p, const polyhedron &q);

// image under x -> m x + b, m has rows in R^dim(p)
polyhedron affine_image(const polyhedron &p, const std::vector<rvec> &m, const rvec &b);
// keeps the listed coordinates in order
polyhedron project(const polyhedron &p, const std::vector<std::size_t> &keep);
// embeds p into R^d placing its coordinates at offset
polyhedron lift(const polyhedron &p, std::size_t d, std::size_t offset);

// r in R^{2n} read as (x, y) pairs
polyhedron relation_apply(const polyhedron &r, const polyhedron &s);
polyhedron relation_compose(const polyhedron &r2, const polyhedron &r1); // r2 after r1

} // namespace interflow
