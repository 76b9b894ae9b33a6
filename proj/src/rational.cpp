#include "hp/rational.hpp"

namespace hp {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw Error("division by zero");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), e);
  return Rational(n, d);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace hp
