#include "kummer/json_io.hpp"

namespace kummer {

Json to_json(const mpz_class& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const mpq_class& r) { return Json(r.get_str()); }

Json coeffs_json(const CyclotomicInteger& g) { return Json(format_coeffs(g)); }

Json divisor_json(const IdealPrimeDivisor& p) {
  Json j;
  j["q"] = to_json(p.q());
  j["f"] = p.f();
  if (p.f() == 1) {
    j["xi"] = to_json(p.xi());
    return j;
  }
  j["e"] = p.e();
  j["shift"] = p.shift();
  Json u = Json::array();
  for (const auto& x : p.u_tuple()) u.push_back(to_json(x));
  j["u"] = std::move(u);
  return j;
}

}  // namespace kummer
