#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ho3 {

// contract breach: malformed input, failed structural precondition.
// axiom failures are not faults; validators collect those into reports.
struct FaultError : std::runtime_error {
  explicit FaultError(const std::string& msg) : std::runtime_error(msg) {}
};

// Q, or F_p with p prime below 2^61.
// characteristic 2 degenerates the quadratic pairing identities, so it is
// rejected unless explicitly allowed.
struct FieldSpec {
  bool modular = false;
  unsigned long p = 0;

  static FieldSpec rationals();
  static FieldSpec prime_field(unsigned long p, bool allow_char_two = false);

  bool operator==(const FieldSpec&) const = default;
  std::string name() const;
};

// deterministic Miller-Rabin, valid for all n < 2^61
bool is_prime_u64(unsigned long n);

// scalars are mpq_class everywhere; invariant under F_p: denominator 1,
// numerator in [0, p)
mpq_class f_norm(const FieldSpec& fs, const mpq_class& x);
mpq_class f_add(const FieldSpec& fs, const mpq_class& a, const mpq_class& b);
mpq_class f_sub(const FieldSpec& fs, const mpq_class& a, const mpq_class& b);
mpq_class f_mul(const FieldSpec& fs, const mpq_class& a, const mpq_class& b);
mpq_class f_neg(const FieldSpec& fs, const mpq_class& a);
mpq_class f_inv(const FieldSpec& fs, const mpq_class& a);
mpq_class f_div(const FieldSpec& fs, const mpq_class& a, const mpq_class& b);
bool f_is_zero(const mpq_class& a);

std::string f_str(const mpq_class& a);
mpq_class f_parse(const FieldSpec& fs, const std::string& s);

// "Q" or "Fp:<p>"
FieldSpec parse_field_name(const std::string& s, bool allow_char_two = false);

}  // namespace ho3
