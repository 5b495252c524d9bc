#pragma once

#include <stdexcept>
#include <string>

#include "tropfrac/certify.hpp"
#include "tropfrac/spectral.hpp"

namespace tropfrac {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An instance document as written: either the original form
// {"A","B","c","d","p","q","r","s"} or the homogeneous form {"C","D","u","v"},
// with an optional "objective": "minimize" | "maximize".
struct InstanceDocument {
  bool homogeneous_form = false;
  bool maximize = false;
  LfpInstance original;  // original form only
  TropMatrix C, D;       // homogeneous form only
  Vector u, v;

  // The minimization the solvers see. Maximizing (px v r) - (qx v s) is
  // minimizing (qx v s) - (px v r): the objective rows swap and lambda* flips sign.
  HomogeneousInstance homogeneous() const;
  std::size_t variables() const;  // n of the original problem
};

// Entries: JSON integers, strings "12", "-3/4", "2.5", or "-inf". Throws ParseError
// naming the offending field.
InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

// {"type":"optimality","lambda":"p/q","tau":[...],"witness":[...]} or
// {"type":"unboundedness","sigma":[...]}; strategies are 1-based.
struct CertificateDocument {
  bool optimality = true;
  OptimalityCertificate opt;
  UnboundednessCertificate unb;
};

CertificateDocument parse_certificate(const std::string& text);
std::string serialize_certificate(const CertificateDocument& doc);

// Canonical text of an extended number: "-inf", "p/q" or "p".
std::string format(const ExtendedNumber& x);

}  // namespace tropfrac
