#pragma once

namespace povmkit {

// Global absolute tolerance used by comparisons and validity checks.
// Functions that take an explicit eps parameter default to this value;
// the CLI wires the POVM_EPS environment variable to set_default_eps.
double default_eps();
void set_default_eps(double eps);

}  // namespace povmkit
