#include "ho3/field.hpp"

namespace ho3 {

FieldSpec FieldSpec::rationals() { return FieldSpec{false, 0}; }

FieldSpec FieldSpec::prime_field(unsigned long p, bool allow_char_two) {
  if (p == 2 && !allow_char_two)
    throw FaultError("field Fp:2 requires the explicit characteristic-2 override");
  if (p >= (1ul << 61)) throw FaultError("prime modulus must be below 2^61");
  if (!is_prime_u64(p)) throw FaultError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{true, p};
}

std::string FieldSpec::name() const {
  return modular ? "Fp:" + std::to_string(p) : "Q";
}

bool is_prime_u64(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  mpz_class nz(static_cast<unsigned long>(n));
  unsigned long d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  // the fixed base set decides primality for everything below 3.3e24
  for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    mpz_class x, az(a), dz(d);
    mpz_powm(x.get_mpz_t(), az.get_mpz_t(), dz.get_mpz_t(), nz.get_mpz_t());
    if (x == 1 || x == nz - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = (x * x) % nz;
      if (x == nz - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

mpq_class f_norm(const FieldSpec& fs, const mpq_class& x) {
  mpq_class v = x;
  v.canonicalize();
  if (!fs.modular) return v;
  mpz_class p(fs.p);
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den == 0) throw FaultError("denominator not invertible mod " + std::to_string(fs.p));
  if (den != 1) {
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()))
      throw FaultError("denominator not invertible mod " + std::to_string(fs.p));
    num = (num * inv) % p;
  }
  return mpq_class(num);
}

mpq_class f_add(const FieldSpec& fs, const mpq_class& a, const mpq_class& b) {
  return f_norm(fs, a + b);
}
mpq_class f_sub(const FieldSpec& fs, const mpq_class& a, const mpq_class& b) {
  return f_norm(fs, a - b);
}
mpq_class f_mul(const FieldSpec& fs, const mpq_class& a, const mpq_class& b) {
  return f_norm(fs, a * b);
}
mpq_class f_neg(const FieldSpec& fs, const mpq_class& a) { return f_norm(fs, -a); }

mpq_class f_inv(const FieldSpec& fs, const mpq_class& a) {
  if (f_is_zero(a)) throw FaultError("division by zero");
  if (!fs.modular) return mpq_class(1) / a;
  mpz_class p(fs.p), inv;
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  if (!mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()))
    throw FaultError("element not invertible mod " + std::to_string(fs.p));
  return mpq_class(inv);
}

mpq_class f_div(const FieldSpec& fs, const mpq_class& a, const mpq_class& b) {
  return f_mul(fs, a, f_inv(fs, b));
}

bool f_is_zero(const mpq_class& a) { return sgn(a) == 0; }

std::string f_str(const mpq_class& a) { return a.get_str(); }

mpq_class f_parse(const FieldSpec& fs, const std::string& s) {
  if (s.empty()) throw FaultError("empty scalar literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw FaultError("bad scalar literal: " + s);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw FaultError("bad scalar literal: " + s);
  if (v.get_den() == 0) throw FaultError("zero denominator in scalar literal: " + s);
  return f_norm(fs, v);
}

FieldSpec parse_field_name(const std::string& s, bool allow_char_two) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty()) throw FaultError("bad field name: " + s);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw FaultError("bad field name: " + s);
    unsigned long p = 0;
    try {
      p = std::stoul(digits);
    } catch (const std::exception&) {
      throw FaultError("bad field name: " + s);
    }
    return FieldSpec::prime_field(p, allow_char_two);
  }
  throw FaultError("bad field name: " + s + " (expected Q or Fp:<p>)");
}

}  // namespace ho3
