#include "fusedr/rational.hpp"

#include <cctype>
#include <ostream>

namespace fusedr {

ExactScalar::ExactScalar(long num, long den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator: " + std::to_string(num) + "/0");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

ExactScalar ExactScalar::parse(std::string_view text) {
  const auto bad = [&] {
    return DomainError("not an exact rational \"p/q\": '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
  }
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);  // GMP rejects '+'
  mpq_class v;
  if (v.set_str(std::string(body), 10) != 0) throw bad();
  if (sgn(mpq_class(v.get_den())) == 0) {
    throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  }
  v.canonicalize();
  return ExactScalar(v);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) {
    throw DomainError("division by zero (dividing " + str() + " by 0)");
  }
  v_ /= o.v_;
  return *this;
}

ExactScalar ExactScalar::pow(long e) const {
  if (e == 0) return ExactScalar(1);
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) {
    throw DomainError("zero raised to negative power " + std::to_string(e));
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), n);
  r.canonicalize();
  ExactScalar out{r};
  if (invert) {
    return ExactScalar(1) / out;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

QParams::QParams(ExactScalar q_value) : q(std::move(q_value)), t(q * q) {
  if (q.is_zero()) throw DomainError("deformation parameter q must be nonzero");
}

}  // namespace fusedr
