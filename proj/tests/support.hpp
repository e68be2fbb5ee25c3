#pragma once

#include "biq/biquiver.hpp"
#include "biq/cmatrix.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace testing {

/// (id, from, to, 'f' or 'd') with 1-based endpoints.
using ArrowSpec = std::tuple<std::string, int, int, char>;

inline biq::Biquiver make(int t, const std::vector<ArrowSpec>& arrows) {
  std::vector<biq::Arrow> out;
  for (const auto& [id, from, to, kind] : arrows)
    out.push_back({id, from - 1, to - 1, kind == 'd' ? biq::ArrowKind::Dashed : biq::ArrowKind::Full});
  return {t, std::move(out)};
}

inline biq::GaussianRational gi(long re, long im) { return {biq::Rational(re), biq::Rational(im)}; }

inline biq::CMatrix scalar(const biq::GaussianRational& z) { return biq::CMatrix{{z}}; }

/// Path 1 - 2 - ... - t with arrows "e1".. from i to i+1.
inline biq::Biquiver path(int t, char kind = 'f') {
  std::vector<ArrowSpec> a;
  for (int i = 1; i < t; ++i)
    a.emplace_back("e" + std::to_string(i), i, i + 1, kind);
  return make(t, a);
}

}  // namespace testing
