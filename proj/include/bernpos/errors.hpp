#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bernpos {

/// A requested degree is below the degree of the polynomial it applies to.
class degree_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The polynomial takes a value <= 0 somewhere on the box. `witness` holds
/// the point (one or two coordinates) and `value` the exact value there.
class not_positive_error : public std::runtime_error {
 public:
  not_positive_error(const std::string& what, std::vector<mpq_class> witness, mpq_class value)
      : std::runtime_error(what), witness_(std::move(witness)), value_(std::move(value)) {}

  const std::vector<mpq_class>& witness() const noexcept { return witness_; }
  const mpq_class& value() const noexcept { return value_; }

 private:
  std::vector<mpq_class> witness_;
  mpq_class value_;
};

/// Positivity could neither be proved nor refuted within the iteration caps.
/// `lo`/`hi` carry the best enclosure reached when one is meaningful.
class inconclusive_error : public std::runtime_error {
 public:
  inconclusive_error(const std::string& what, mpq_class lo = 0, mpq_class hi = 0)
      : std::runtime_error(what), lo_(std::move(lo)), hi_(std::move(hi)) {}

  const mpq_class& lo() const noexcept { return lo_; }
  const mpq_class& hi() const noexcept { return hi_; }

 private:
  mpq_class lo_;
  mpq_class hi_;
};

}  // namespace bernpos
