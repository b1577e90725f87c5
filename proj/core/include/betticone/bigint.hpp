#pragma once

#include <gmpxx.h>

namespace betticone {

/// Arbitrary-precision integer used wherever values can outgrow 64 bits
/// (Herzog-Kuehl sums, constraint matrices, elimination fallback).
using BigInt = mpz_class;

}  // namespace betticone
