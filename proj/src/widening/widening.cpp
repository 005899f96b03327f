#include "interflow/widening/widening.hpp"

#include "interflow/core/errors.hpp"

#include <random>
#include <sstream>

namespace interflow {

widening_op::widening_op(lattice_ptr l, std::vector<element> table, std::string name)
    : m_l(std::move(l)), m_table(std::move(table)), m_name(std::move(name)) {
  if (m_table.size() != m_l->size() * m_l->size())
    throw error(error_kind::carrier_mismatch, "widening table is not total");
}

widening_op widening_op::join(const lattice_ptr &l) {
  std::vector<element> t;
  for (auto a : l->elements())
    for (auto b : l->elements())
      t.push_back(l->join(a, b));
  return {l, t, "join"};
}

widening_op widening_op::from_entries(const lattice_ptr &l, const std::vector<widen_entry> &entries,
                                      std::string name) {
  auto op = join(l);
  op.m_name = std::move(name);
  for (auto &e : entries)
    op.m_table[e.a.index * l->size() + e.b.index] = e.result;
  return op;
}

widening_op widening_op::of_spec(const lattice_spec &spec) {
  if (!spec.has_widen)
    throw error(error_kind::missing_abstraction, "lattice spec has no 'widen:' line");
  return from_entries(spec.lattice, spec.widen, "table");
}

element widening_op::operator()(element a, element b) const {
  return m_table.at(a.index * m_l->size() + b.index);
}

bool widening_op::equals_join() const { return *this == join(m_l); }

widening_op idp_wrap(const widening_op &op) {
  const auto &l = op.carrier();
  std::vector<element> t;
  for (auto a : l->elements())
    for (auto b : l->elements())
      t.push_back(l->leq(b, a) ? a : op(a, b));
  return {l, t, op.name() + "_idp"};
}

std::function<tabulated_fn(const tabulated_fn &, const tabulated_fn &)>
lift_widen(const widening_op &op) {
  return [op](const tabulated_fn &f, const tabulated_fn &g) {
    std::vector<element> t;
    for (std::size_t i = 0; i < f.table().size(); ++i)
      t.push_back(op(f.table()[i], g.table()[i]));
    return tabulated_fn::unchecked(f.carrier(), t);
  };
}

std::string widening_report::render() const {
  std::ostringstream out;
  auto law = [&](const law_result &r) {
    out << r.law << ": " << (r.ok ? "pass" : "fail");
    if (!r.ok)
      out << " (" << r.witness << ")";
    out << "\n";
  };
  out << "widening: " << op << "\n";
  law(extrapolation);
  law(stabilization);
  out << "monotone: " << (monotone ? "yes" : "no");
  if (!monotone)
    out << " (" << monotone_witness << ")";
  out << "\n";
  out << "idempotent: " << (idempotent ? "yes" : "no");
  if (!idempotent)
    out << " (" << idempotent_witness << ")";
  out << "\n";
  out << "equals-join: " << (equals_join ? "yes" : "no") << "\n";
  out << "join-consistency: " << (join_consistent ? "pass" : "fail") << "\n";
  return out.str();
}

widening_report validate_widening(const widening_op &op, std::uint64_t seed, std::size_t sequences) {
  const auto &l = *op.carrier();
  auto es = l.elements();
  auto nm = [&](element e) { return l.name(e); };
  widening_report rep;
  rep.op = op.name();
  for (auto a : es)
    for (auto b : es) {
      auto r = op(a, b);
      if (rep.extrapolation.ok && !l.leq(l.join(a, b), r)) {
        rep.extrapolation.ok = false;
        rep.extrapolation.witness = nm(a) + " widen " + nm(b) + " = " + nm(r) +
                                    " is not above " + nm(l.join(a, b));
      }
      if (rep.idempotent && a == b && r != a) {
        rep.idempotent = false;
        rep.idempotent_witness = nm(a) + " widen " + nm(a) + " = " + nm(r);
      }
    }
  for (auto a : es)
    for (auto a2 : es) {
      if (!l.leq(a, a2))
        continue;
      for (auto b : es)
        for (auto b2 : es) {
          if (!rep.monotone || !l.leq(b, b2))
            continue;
          if (!l.leq(op(a, b), op(a2, b2))) {
            rep.monotone = false;
            rep.monotone_witness = nm(a) + " widen " + nm(b) + " = " + nm(op(a, b)) +
                                   " not below " + nm(a2) + " widen " + nm(b2) + " = " +
                                   nm(op(a2, b2));
          }
        }
    }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
  std::size_t len = 2 * es.size() + 4;
  for (std::size_t s = 0; s < sequences && rep.stabilization.ok; ++s) {
    element x = es[pick(rng)];
    std::size_t changes = 0;
    for (std::size_t i = 0; i < len; ++i) {
      auto nx = op(x, es[pick(rng)]);
      if (nx != x)
        ++changes;
      x = nx;
    }
    if (changes >= es.size()) {
      rep.stabilization.ok = false;
      rep.stabilization.witness = "sequence " + std::to_string(s) + " changed " +
                                  std::to_string(changes) + " times";
    }
  }
  rep.equals_join = op.equals_join();
  rep.join_consistent = !(rep.monotone && rep.idempotent) || rep.equals_join;
  return rep;
}

widening_report validate_interval_widening(std::uint64_t seed, std::size_t sequences) {
  widening_report rep;
  rep.op = "interval";
  std::vector<bound> bs{bound::minus_inf()};
  for (long v = -2; v <= 2; ++v)
    bs.push_back(bound::of(v));
  bs.push_back(bound::plus_inf());
  std::vector<interval> grid{interval::empty()};
  for (auto &a : bs)
    for (auto &b : bs)
      if (a <= b && a.k != bound::kind::pos_inf && b.k != bound::kind::neg_inf)
        grid.emplace_back(a, b);

  auto mono_check = [&](const interval &a, const interval &a2, const interval &b,
                        const interval &b2) {
    if (!rep.monotone || !interval_leq(a, a2) || !interval_leq(b, b2))
      return;
    auto r1 = interval_widen(a, b), r2 = interval_widen(a2, b2);
    if (!interval_leq(r1, r2)) {
      rep.monotone = false;
      rep.monotone_witness = a.str() + " widen " + b.str() + " = " + r1.str() + " not below " +
                             a2.str() + " widen " + b2.str() + " = " + r2.str();
    }
  };
  mono_check(interval(0, 1), interval(0, 2), interval(0, 2), interval(0, 2));
  rep.equals_join = true;
  for (auto &a : grid)
    for (auto &b : grid) {
      auto r = interval_widen(a, b);
      if (rep.extrapolation.ok && !interval_leq(interval_join(a, b), r)) {
        rep.extrapolation.ok = false;
        rep.extrapolation.witness = a.str() + " widen " + b.str() + " = " + r.str();
      }
      if (!(r == interval_join(a, b)))
        rep.equals_join = false;
      if (rep.idempotent && a == b && !(r == a)) {
        rep.idempotent = false;
        rep.idempotent_witness = a.str() + " widen " + a.str() + " = " + r.str();
      }
    }
  for (auto &a : grid)
    for (auto &a2 : grid)
      for (auto &b : grid)
        for (auto &b2 : grid)
          mono_check(a, a2, b, b2);

  // empty -> bounded -> one side infinite -> top: at most three changes
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-50, 50);
  auto rnd = [&] {
    long a = val(rng), b = val(rng);
    if (a > b)
      std::swap(a, b);
    return interval(a, b);
  };
  for (std::size_t s = 0; s < sequences && rep.stabilization.ok; ++s) {
    interval x = interval::empty();
    std::size_t changes = 0;
    for (int i = 0; i < 50; ++i) {
      auto nx = interval_widen(x, rnd());
      if (!(nx == x))
        ++changes;
      x = nx;
    }
    if (changes > 3) {
      rep.stabilization.ok = false;
      rep.stabilization.witness = "sequence " + std::to_string(s) + " changed " +
                                  std::to_string(changes) + " times";
    }
  }
  rep.join_consistent = !(rep.monotone && rep.idempotent) || rep.equals_join;
  return rep;
}

} // namespace interflow
