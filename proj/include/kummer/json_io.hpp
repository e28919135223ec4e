#pragma once

// JSON encodings shared by the CLI and the sweep tables. Integers that fit in
// 64 bits are JSON numbers, larger ones decimal strings; rationals are "p/q"
// strings.

#include "kummer/cyclotomic.hpp"
#include "kummer/divisors.hpp"

#include <json.hpp>

#include <gmpxx.h>

namespace kummer {

using Json = nlohmann::ordered_json;

Json to_json(const mpz_class& n);
Json to_json(const mpq_class& r);
Json coeffs_json(const CyclotomicInteger& g);
/// {"q","f","xi"} for f = 1 (xi = 1 for the lambda divisor), else {"q","f","e","shift","u"}.
Json divisor_json(const IdealPrimeDivisor& p);

}  // namespace kummer
