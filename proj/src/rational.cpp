#include "mlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace mlie {

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(std::to_string(num)) / mpq_class(std::to_string(den));
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view text) {
  auto bad = [&](const char* why) {
    return std::invalid_argument(std::string("bad rational '") + std::string(text) + "': " + why);
  };
  size_t i = 0;
  auto read_int = [&](bool sign_allowed) -> mpz_class {
    bool negative = false;
    if (sign_allowed && i < text.size() && (text[i] == '+' || text[i] == '-'))
      negative = text[i++] == '-';
    std::string digits;
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (i == start) throw bad("expected digits");
    mpz_class v(digits);
    return negative ? mpz_class(-v) : v;
  };
  mpz_class num = read_int(true);
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int(false);
    if (den == 0) throw bad("zero denominator");
  }
  if (i != text.size()) throw bad("trailing characters");
  mpq_class q(num, den);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

mpz_class floor_int(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.value().get_num().get_mpz_t(), r.value().get_den().get_mpz_t());
  return q;
}

}  // namespace mlie
