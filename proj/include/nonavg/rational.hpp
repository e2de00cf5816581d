#pragma once

#include <gmpxx.h>

#include <string>

#include "nonavg/checked.hpp"

namespace nonavg {

using Rat = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", plain integers, and decimal literals like "0.05" (parsed exactly).
Rat rat_from_string(const std::string& s);

// Canonical "p" or "p/q".
std::string rat_to_string(const Rat& r);

BigInt rat_floor(const Rat& r);
BigInt rat_ceil(const Rat& r);

Rat rat_pow(const Rat& r, unsigned long e);

double rat_to_double(const Rat& r);

// Throws OverflowError if v does not fit an Int.
Int bigint_to_int(const BigInt& v);

}  // namespace nonavg
