#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace interflow {

using rational = mpq_class;
using integer = mpz_class;
using rvec = std::vector<rational>;

rational parse_rational(const std::string &text);
std::string to_string(const rational &q);
std::string to_string(const integer &z);
std::string render_vec(const rvec &v);

// mpq values built from raw num/den are not reduced
void canonicalize(rvec &v);

rational dot(const rvec &a, const rvec &b);
// scale to coprime integers, sign preserved
void make_primitive(rvec &v);
bool is_zero(const rvec &v);

} // namespace interflow
