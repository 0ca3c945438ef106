#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

enum class Err {
  ZeroPolynomial,
  NotSymmetric,
  LeadingCoefficientZero,
  SingularMatrix,
  InfinityNotSupported,
  RootsNotRational,
  RootsNotDistinct,
  DegeneratePoints,
  NotSmooth,
  NotStable,
  AVanishes,
  AllZero,
  OutOfRange,
  QuasiReflectionPresent,
  RankDeficient,
  VerificationFailed,
  Parse,
  Internal,
};

class G2Error : public std::runtime_error {
public:
  G2Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw G2Error(code, what); }

// Internal consistency guard; used where the math guarantees something the
// code relies on (e.g. a semistable form must have B=C=D=E=0).
inline void require(bool ok, const std::string& what) {
  if (!ok) throw G2Error(Err::Internal, "internal invariant violated: " + what);
}

} // namespace g2
