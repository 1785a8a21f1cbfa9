#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ztop {

/// Base of every error raised on bad input or unsupported data.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : Error("unknown variable '" + name + "' at position " + std::to_string(position)), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NonVanishingAtOrigin : public Error {
 public:
  NonVanishingAtOrigin() : Error("polynomial does not vanish at the origin") {}
};

class FaceMismatch : public Error {
 public:
  FaceMismatch() : Error("face does not belong to the Newton polygon of the polynomial") {}
};

class NotReduced : public Error {
 public:
  NotReduced()
      : Error("polynomial has a repeated factor through the origin (pass --allow-nonreduced to accept it)") {}
};

/// A blowup center is a conjugate orbit of degree > 1 that still needs blowing up.
class IrrationalCenter : public Error {
 public:
  explicit IrrationalCenter(const std::string& orbit)
      : Error("blowup center is an irrational point orbit (" + orbit +
              "); try the toric pipeline if the germ is non-degenerate") {}
};

class Degenerate : public Error {
 public:
  Degenerate() : Error("polynomial is degenerate with respect to its Newton polygon") {}
};

class UnresolvedState : public Error {
 public:
  UnresolvedState() : Error("blowup state still has pending centers") {}
};

class InvalidResolutionData : public Error {
 public:
  explicit InvalidResolutionData(const std::string& what) : Error("invalid resolution data: " + what) {}
};

class NoQualifyingComponent : public Error {
 public:
  NoQualifyingComponent() : Error("no component qualifies for the log canonical threshold") {}
};

/// An order-n pole contradicts a proven statement: a data error or a counterexample.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ztop
