#pragma once

#include "bibaz/random.hpp"
#include "bibaz/series.hpp"
#include "oracle.hpp"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace support {

using bibaz::Rational;
using C = bibaz::Complex<Rational>;
using S = bibaz::TruncSeries<Rational>;

inline oracle::Poly poly(const S& s) { return {s.coeffs().begin(), s.coeffs().end()}; }
inline S series(const oracle::Poly& p) { return S(std::vector<C>(p)); }

inline C cr(long long p, long long q = 1) { return C(Rational(p, q)); }

/// Random series of the given order with small rational complex coefficients.
inline S random_series(bibaz::Sampler& rng, int order, bool unit_constant = false) {
  std::vector<C> c;
  for (int i = 0; i <= order; ++i) c.push_back(rng.rational_disc(Rational(3), 5));
  if (unit_constant) c[0] = C(1);
  return S(std::move(c));
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; stderr goes to /dev/null.
inline RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace support
