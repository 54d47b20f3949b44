#pragma once

// Sparse polynomials over Q in at most 16 variables, terms kept in strictly
// decreasing graded reverse lexicographic order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhk/linalg.hpp"
#include "bhk/monomial.hpp"

namespace bhk {

/// Ordered variable names; index 0 is the largest variable.
class Ring {
public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const {
    return names_[i];
  }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view n) const;
  /// The same ring with one more variable appended.
  [[nodiscard]] Ring extended(const std::string& name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  std::vector<std::string> names_;
};

struct Term {
  Monomial m;
  Rational c;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial term(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(std::size_t i);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Term& leading() const { return terms_.front(); }
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree_in(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  [[nodiscard]] Polynomial scaled(const Rational& c) const;
  /// this * c * m
  [[nodiscard]] Polynomial times_term(const Monomial& m,
                                      const Rational& c) const;
  /// this - c * m * g, merged in one pass.
  void subtract_multiple(const Polynomial& g, const Monomial& m,
                         const Rational& c);
  [[nodiscard]] Polynomial pow(unsigned e) const;
  /// Divides by the leading coefficient.
  [[nodiscard]] Polynomial monic() const;

  [[nodiscard]] Polynomial derivative(std::size_t var) const;
  [[nodiscard]] Polynomial substitute(std::size_t var, const Rational& v) const;
  /// Terms containing var^k exactly, with var removed.
  [[nodiscard]] Polynomial coefficient_of(std::size_t var, unsigned k) const;

  [[nodiscard]] std::string to_string(const Ring& ring) const;
  static Polynomial parse(std::string_view text, const Ring& ring);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<Term> terms_;
};

std::string format_monomial(const Monomial& m, const Ring& ring);

/// Ideal generators together with their ring.
struct PolyIdeal {
  Ring ring;
  std::vector<Polynomial> generators;
};

} // namespace bhk
