// Copyright 2026 The dilaton-steering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilaton/dilaton.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "dilaton/errors.hpp"
#include "dilaton/roots.hpp"

namespace dilaton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

void check_mass_omega(double mass, double omega) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ValidationError(fmt::format("mass must be positive, got {}", mass));
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw ValidationError(fmt::format("omega must be positive, got {}", omega));
  }
}

MeasureSet finish(MeasureSet m) {
  m.bell = std::max(m.bell_branch1, m.bell_branch2);
  m.asymmetry = std::abs(m.s_forward - m.s_backward);
  m.regime = classify_regime(m.s_forward, m.s_backward);
  return m;
}

}  // namespace

DilatonParams::DilatonParams(double mass, double dilaton, double omega)
    : mass_(mass), dilaton_(dilaton), omega_(omega) {
  check_mass_omega(mass, omega);
  if (!(dilaton >= 0.0) || !(dilaton < mass)) {
    throw ValidationError(
        fmt::format("dilaton must satisfy 0 <= D < M, got D = {} with M = {}", dilaton, mass));
  }
}

double DilatonParams::thermal_argument() const {
  return 8.0 * kPi * (mass_ - dilaton_) * omega_;
}

BogoliubovAmplitudes bogoliubov(const DilatonParams& p) {
  BogoliubovAmplitudes a;
  a.x = p.thermal_argument();
  // Each of these is a monotone function of x and saturates rather than
  // overflowing for large x.
  a.c2 = 1.0 / (1.0 + std::exp(-a.x));
  a.s2 = 1.0 / (1.0 + std::exp(a.x));
  a.c = std::sqrt(a.c2);
  a.s = std::sqrt(a.s2);
  a.cs = 0.5 / std::cosh(0.5 * a.x);
  a.temperature = 1.0 / (8.0 * kPi * (p.mass() - p.dilaton()));
  return a;
}

double extreme_dilaton(double mass) { return mass * (1.0 - 1e-12); }

PureState tripartite_pure_state(const DilatonParams& p) {
  const BogoliubovAmplitudes a = bogoliubov(p);
  ComplexVector v = ComplexVector::Zero(8);
  v(0b000) = a.c / kSqrt2;
  v(0b011) = a.s / kSqrt2;
  v(0b110) = 1.0 / kSqrt2;
  return PureState(std::move(v));
}

DensityMatrix tripartite_state(const DilatonParams& p) {
  return from_pure(tripartite_pure_state(p));
}

std::string_view pair_name(Pair pair) {
  switch (pair) {
    case Pair::AB: return "ab";
    case Pair::ABbar: return "abbar";
    case Pair::BBbar: return "bbbar";
  }
  return "ab";
}

DensityMatrix reduced_density(const DilatonParams& p, Pair pair) {
  const DensityMatrix full = tripartite_state(p);
  switch (pair) {
    case Pair::AB: return partial_trace(full, {0, 1});
    case Pair::ABbar: return partial_trace(full, {0, 2});
    case Pair::BBbar: return partial_trace(full, {1, 2});
  }
  throw ArgumentError("unknown pair");
}

XState reduced(const DilatonParams& p, Pair pair) { return as_xstate(reduced_density(p, pair)); }

MeasureSet closed_form_measures(const DilatonParams& p, Pair pair) {
  const BogoliubovAmplitudes a = bogoliubov(p);
  // 1/(e^{-x}+e^{x}+2) == (cs)^2.
  const double cs2 = a.cs * a.cs;
  MeasureSet m;
  switch (pair) {
    case Pair::AB:
      m.s_forward = std::max(0.0, a.c2 - cs2 / kSqrt3);
      m.s_backward = std::max(0.0, a.c2 - a.s2 / kSqrt3);
      m.bell_branch1 = 2.0 * kSqrt2 * a.c;
      m.bell_branch2 = 2.0 * a.c * std::sqrt(1.0 + a.c2);
      m.concurrence = a.c;
      break;
    case Pair::ABbar:
      m.s_forward = std::max(0.0, a.s2 * (1.0 - a.c2 / kSqrt3));
      m.s_backward = std::max(0.0, a.s2 - a.c2 / kSqrt3);
      m.bell_branch1 = 2.0 * kSqrt2 * a.s;
      m.bell_branch2 = 2.0 * a.s * std::sqrt(1.0 + a.s2);
      m.concurrence = a.s;
      break;
    case Pair::BBbar:
      m.s_forward = std::max(0.0, a.s2 * (a.c2 - 1.0 / kSqrt3));
      m.s_backward = std::max(0.0, a.c2 * (a.s2 - 1.0 / kSqrt3));
      m.bell_branch1 = 2.0 * kSqrt2 * a.cs;
      m.bell_branch2 = 2.0 * a.cs;
      m.concurrence = a.cs;
      break;
  }
  return finish(m);
}

MeasureSet pipeline_measures(const DilatonParams& p, Pair pair) {
  const DensityMatrix rho = reduced_density(p, pair);
  const XState x = as_xstate(rho);
  const ChshSignal chsh = chsh_max_x(x);
  MeasureSet m;
  m.s_forward = steerability(x, Direction::AtoB);
  m.s_backward = steerability(x, Direction::BtoA);
  m.bell_branch1 = chsh.branch1;
  m.bell_branch2 = chsh.branch2;
  m.concurrence = concurrence_general(rho);
  m = finish(m);
  m.bell = chsh_max_general(rho);
  return m;
}

std::string_view critical_name(Critical which) {
  switch (which) {
    case Critical::SuddenBirth: return "D0";
    case Critical::MaxSteering: return "D1";
    case Critical::SuddenDeath: return "D2";
  }
  return "D0";
}

CriticalPoints critical_dilatons(double mass, double omega) {
  check_mass_omega(mass, omega);
  const double scale = 1.0 / (8.0 * kPi * omega);
  auto flagged = [mass](double value) {
    return CriticalValue{value, value >= 0.0 && value < mass};
  };
  CriticalPoints out;
  out.d0 = flagged(mass - scale * std::log(kSqrt3));
  out.d1 = flagged(mass - scale * (std::log(kSqrt3 + 1.0) - std::log(kSqrt3 - 1.0)));
  out.d2 = flagged(mass + scale * std::log(kSqrt3 - 1.0));
  return out;
}

double find_critical_numeric(double mass, double omega, Critical which) {
  check_mass_omega(mass, omega);
  const double lo = 0.0;
  const double hi = extreme_dilaton(mass);

  auto margin = [mass, omega](Pair pair, Direction dir) {
    return [=](double d) { return witness_margin(reduced(DilatonParams(mass, d, omega), pair), dir); };
  };

  switch (which) {
    case Critical::SuddenBirth:
      return bisect(margin(Pair::ABbar, Direction::BtoA), lo, hi, 1e-12 * mass);
    case Critical::SuddenDeath: {
      // Near D = 0 the margin falls below rounding noise for large omega, so
      // bracket from the interior maximum when it is resolvably positive.
      auto f = margin(Pair::BBbar, Direction::AtoB);
      const double peak = golden_section_max(f, lo, hi, 1e-10 * mass);
      const double start = f(peak) > 0.0 ? peak : lo;
      return bisect(f, start, hi, 1e-12 * mass);
    }
    case Critical::MaxSteering: {
      auto f = margin(Pair::BBbar, Direction::AtoB);
      const double tolerance = 1e-10 * mass;
      const double arg = golden_section_max(f, lo, hi, tolerance);
      if (arg - lo < 10.0 * tolerance || hi - arg < 10.0 * tolerance) {
        throw RootNotFound(lo, hi, f(lo), f(hi));
      }
      return arg;
    }
  }
  throw ArgumentError("unknown critical point");
}

MonogamyResiduals monogamy_residuals(const DilatonParams& p, Route route) {
  auto measures = [&](Pair pair) {
    return route == Route::ClosedForm ? closed_form_measures(p, pair)
                                      : pipeline_measures(p, pair);
  };
  const MeasureSet ab = measures(Pair::AB);
  const MeasureSet abbar = measures(Pair::ABbar);
  const MeasureSet bbbar = measures(Pair::BBbar);

  const double c2_ab = ab.concurrence * ab.concurrence;
  const double c2_abbar = abbar.concurrence * abbar.concurrence;
  const double c2_bbbar = bbbar.concurrence * bbbar.concurrence;

  MonogamyResiduals r;
  r.r1 = (ab.s_forward - abbar.s_forward) - (c2_ab - c2_abbar);
  r.r2 = (ab.s_forward + abbar.s_forward) - (c2_ab + c2_abbar - 2.0 / kSqrt3 * c2_bbbar);
  r.r3 = 0.5 * (3.0 - kSqrt3) * (ab.s_backward - abbar.s_backward) - (c2_ab - c2_abbar);
  r.r4 = 0.5 * (3.0 + kSqrt3) * (ab.s_backward + abbar.s_backward) - (c2_ab + c2_abbar);
  const bool above_d0 = p.dilaton() > critical_dilatons(p.mass(), p.omega()).d0.value;
  r.r3_valid = above_d0;
  r.r4_valid = above_d0;
  return r;
}

}  // namespace dilaton
