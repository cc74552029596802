#pragma once

#include <optional>
#include <string>

#include "liftlocal/liftengine.hpp"

namespace liftlocal {

inline constexpr const char* kToolVersion = "liftlocal 0.1.0";

// A parsed problem file: the ring presentation, the computation mode, and the
// self map when one is declared.
struct LiftProblem {
    ContextPtr context;
    IdealData ideal;
    Mode mode;
    std::optional<VariableMap> map;
};

// Parses the line-oriented problem format. `#` starts a comment; the
// declarations are
//   field Q            (or: field F 101)
//   ring X Y Z
//   ideal: g1; g2
//   map: X -> expr; Y -> expr; Z -> expr
//   mode: local        (or: graded; local is the default)
// The ideal and map payloads may continue over following lines. An empty
// ideal payload declares the zero ideal.
LiftProblem parse_problem(const std::string& text);

// Reads and parses a problem file; unreadable paths raise ParseError.
LiftProblem load_problem(const std::string& path);

// Renders the certificate in its fixed section order: LIFT, COORD_CHANGE,
// COORD_CHANGE_INVERSE, TRACE, CHECKS, META. Pure function of its inputs, so
// equal certificates render byte-identically.
std::string render_certificate(const LiftCertificate& cert,
                               const VerificationReport& report, Mode mode);

// The three CHECKS lines alone, as rendered inside the certificate.
std::string render_checks(const VerificationReport& report);

// Recovers the lifted variable images from a certificate's LIFT section.
VariableMap parse_certificate_lift(const std::string& text, const ContextPtr& ctx);

}  // namespace liftlocal
