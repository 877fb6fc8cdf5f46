#pragma once

#include <doctest.h>

// Purely relative comparison; doctest::Approx alone adds an absolute floor of epsilon.
inline doctest::Approx approx_rel(double value, double epsilon)
{
    return doctest::Approx(value).epsilon(epsilon).scale(0.0);
}
