#ifndef EXPSUM_ERRORS_HPP
#define EXPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expsum {

// Machine-readable failure categories; mirrored one-to-one by the C API
// status codes so exceptions can cross the shared-library boundary.
enum class Status {
  ok = 0,
  domain_error,        // argument outside the operation's domain
  convergence_error,   // iteration failed to reach its residual target
  proximity_error,     // evaluation point too close to the contour
  quadrature_error,    // quadrature error estimate above target
  validation_error,    // contour admissibility check failed
  ambiguity_error,     // zero matching could not be made unique
  collision_error,     // two indices converged to the same zero
  unsupported_order,   // expansion order beyond the certified coefficients
  jump_locus_error,    // evaluation on a discontinuity without a side flag
  usage_error,         // malformed request (CLI/config level)
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const { return status_; }

private:
  Status status_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(Status::domain_error, m) {}
};
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& m) : Error(Status::convergence_error, m) {}
};
struct ProximityError : Error {
  explicit ProximityError(const std::string& m) : Error(Status::proximity_error, m) {}
};
struct QuadratureError : Error {
  explicit QuadratureError(const std::string& m) : Error(Status::quadrature_error, m) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& m) : Error(Status::validation_error, m) {}
};
struct AmbiguityError : Error {
  explicit AmbiguityError(const std::string& m) : Error(Status::ambiguity_error, m) {}
};
struct CollisionError : Error {
  explicit CollisionError(const std::string& m) : Error(Status::collision_error, m) {}
};
struct UnsupportedOrderError : Error {
  explicit UnsupportedOrderError(const std::string& m) : Error(Status::unsupported_order, m) {}
};
struct JumpLocusError : Error {
  explicit JumpLocusError(const std::string& m) : Error(Status::jump_locus_error, m) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& m) : Error(Status::usage_error, m) {}
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::domain_error: return "domain_error";
    case Status::convergence_error: return "convergence_error";
    case Status::proximity_error: return "proximity_error";
    case Status::quadrature_error: return "quadrature_error";
    case Status::validation_error: return "validation_error";
    case Status::ambiguity_error: return "ambiguity_error";
    case Status::collision_error: return "collision_error";
    case Status::unsupported_order: return "unsupported_order";
    case Status::jump_locus_error: return "jump_locus_error";
    case Status::usage_error: return "usage_error";
  }
  return "unknown";
}

}  // namespace expsum

#endif  // EXPSUM_ERRORS_HPP
