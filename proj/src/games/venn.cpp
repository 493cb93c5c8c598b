// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// Two-player examples over (r, c) that populate every cell of the
// smooth / convex / monotone / socially-convex diagram.

#include <cmath>
#include <numbers>

#include "omg/games.hpp"

namespace omg {

namespace {

using Cost2 = double (*)(double, double);

struct Spec2 {
  Cost2 c1;
  Cost2 c2;
  Vec (*field)(double, double);
  Matrix (*jac)(double, double);
};

GameMap two_player(const std::string& name, const Spec2& s, FeasibleRegion region) {
  GameMap m;
  m.name = name;
  m.dimension = 2;
  m.region = std::move(region);
  m.eval = [f = s.field](std::span<const double> x) { return f(x[0], x[1]); };
  m.jacobian_analytic = [j = s.jac](std::span<const double> x) { return j(x[0], x[1]); };
  m.players.push_back({0, 1, [c = s.c1](std::span<const double> x) { return c(x[0], x[1]); }});
  m.players.push_back({1, 2, [c = s.c2](std::span<const double> x) { return c(x[0], x[1]); }});
  return m;
}

// The tail-drop inspired pair shares its map between d and h.
Vec ratio_field(double r, double c) {
  const double s2 = (r + c) * (r + c);
  return {-0.5 * c / s2, -r / s2};
}

Matrix ratio_jacobian(double r, double c) {
  const double s3 = (r + c) * (r + c) * (r + c);
  return {{c / s3, 0.5 * (c - r) / s3}, {(r - c) / s3, 2.0 * r / s3}};
}

Vec quadratic_shift_field(double r, double c) { return {2 * r, 2 * c + 1}; }
Matrix twice_identity(double, double) { return {{2, 0}, {0, 2}}; }

}  // namespace

VennExample make_venn_example(char id) {
  const FeasibleRegion square = FeasibleRegion::cube(2, -2.0, 2.0);
  const FeasibleRegion positive = FeasibleRegion::cube(2, 0.01, 1.0);
  const double q = std::numbers::pi / 4.0;
  const Vec half{0.5, 0.5};
  const Vec two_thirds{2.0 / 3.0, 1.0 / 3.0};

  VennExample ex;
  ex.id = id;
  ex.trial_social_weights = half;
  const std::string name = std::string("venn_") + id;

  switch (id) {
    case 'a':
      ex.map = two_player(
          name,
          {[](double r, double c) { return -std::cos(r) - std::cos(c); },
           [](double r, double c) { return -std::cos(r) - std::cos(c); },
           [](double r, double c) { return Vec{std::sin(r), std::sin(c)}; },
           [](double r, double c) { return Matrix{{std::cos(r), 0}, {0, std::cos(c)}}; }},
          square);
      ex.smooth_params = {{0.5, 0.5}};
      ex.convex_witnesses = {{0, {2.0, 0.0}, {1.5, 0.0}}};
      ex.monotone_witnesses = {Witness::point({2.0, 2.0})};
      ex.social_witnesses = {{0.0, 0.0}};
      ex.expected = {true, false, false, false};
      break;
    case 'b':
      ex.map = two_player(
          name,
          {[](double r, double c) { return r * r * (std::sin(c) + 1.25); },
           [](double r, double c) { return c * c * (std::sin(r) + 1.25); },
           [](double r, double c) { return Vec{2 * r * (std::sin(c) + 1.25), 2 * c * (std::sin(r) + 1.25)}; },
           [](double r, double c) {
             return Matrix{{2 * (std::sin(c) + 1.25), 2 * r * std::cos(c)},
                           {2 * c * std::cos(r), 2 * (std::sin(r) + 1.25)}};
           }},
          square);
      ex.smooth_params = {{10.0, 0.0}};
      ex.monotone_witnesses = {Witness::point({-q, -q})};
      ex.social_witnesses = {{1.0, -std::numbers::pi / 2.0}};
      ex.expected = {true, true, false, false};
      break;
    case 'c':
      ex.map = two_player(name,
                          {[](double r, double c) { return r * r + c * c; },
                           [](double r, double c) { return r * r + c * c; },
                           [](double r, double c) { return Vec{2 * r, 2 * c}; }, twice_identity},
                          square);
      ex.smooth_params = {{0.5, 0.5}};
      ex.social_witnesses = {{0.0, 0.0}};
      ex.expected = {true, true, true, false};
      break;
    case 'd':
      ex.map = two_player(name,
                          {[](double r, double c) { return -0.5 * r / (r + c); },
                           [](double r, double c) { return -c / (r + c); }, ratio_field, ratio_jacobian},
                          positive);
      ex.smooth_params = {{0.5, -1.0}};
      ex.known_social_weights = two_thirds;
      ex.monotone_witnesses = {Witness::point({0.01, 1.0})};
      ex.expected = {true, true, false, true};
      break;
    case 'e':
      ex.map = two_player(name,
                          {[](double r, double) { return r; }, [](double, double c) { return c; },
                           [](double, double) { return Vec{1.0, 1.0}; },
                           [](double, double) { return Matrix(2, 2); }},
                          square);
      ex.smooth_params = {{1.0, 0.0}};
      ex.known_social_weights = half;
      ex.expected = {true, true, true, true};
      break;
    case 'f':
      ex.map = two_player(
          name,
          {[](double r, double c) { return r * r + r / (c * c + 0.25) - 1.8 * c; },
           [](double r, double c) { return c * c + c / (r * r + 0.25) - 1.8 * r; },
           [](double r, double c) { return Vec{2 * r + 1 / (c * c + 0.25), 2 * c + 1 / (r * r + 0.25)}; },
           [](double r, double c) {
             const double dc = (c * c + 0.25) * (c * c + 0.25);
             const double dr = (r * r + 0.25) * (r * r + 0.25);
             return Matrix{{2, -2 * c / dc}, {-2 * r / dr, 2}};
           }},
          square);
      ex.smooth_witnesses = {{{0.0, 0.0}, {1.0, 1.0}}};
      ex.monotone_witnesses = {Witness::point({0.25, 0.25})};
      ex.social_witnesses = {{1.0, 1.0}};
      ex.expected = {false, true, false, false};
      break;
    case 'g':
      ex.map = two_player(name,
                          {[](double r, double c) { return r * r + c * c - 2; },
                           [](double r, double c) { return r * r + c * c + r + c - 2; }, quadratic_shift_field,
                           twice_identity},
                          square);
      ex.smooth_witnesses = {{{1.0, -1.0}, {-1.0, 1.0}}};
      ex.social_witnesses = {{0.0, 0.0}};
      ex.expected = {false, true, true, false};
      break;
    case 'h':
      ex.map = two_player(name,
                          {[](double r, double c) { return -0.5 * r / (r + c) + 0.75; },
                           [](double r, double c) { return -c / (r + c); }, ratio_field, ratio_jacobian},
                          positive);
      ex.smooth_witnesses = {{{1.0, 1.0}, {0.5, 0.5}}};
      ex.known_social_weights = two_thirds;
      ex.monotone_witnesses = {Witness::point({0.01, 1.0})};
      ex.expected = {false, true, false, true};
      break;
    case 'i':
      ex.map = two_player(name,
                          {[](double r, double) { return r * r - 1; },
                           [](double r, double c) { return c * c + r + c - 1; }, quadratic_shift_field,
                           twice_identity},
                          square);
      ex.smooth_witnesses = {{{1.0, -1.0}, {-1.0, 1.0}}};
      ex.known_social_weights = half;
      ex.expected = {false, true, true, true};
      break;
    default:
      throw std::invalid_argument(std::string("unknown venn example '") + id + "'");
  }
  return ex;
}

ClassifyOptions VennExample::classify_options(std::size_t samples, std::uint64_t seed) const {
  ClassifyOptions o;
  o.smooth_params = smooth_params;
  o.social_weights = known_social_weights ? *known_social_weights : trial_social_weights;
  o.smooth_witnesses = smooth_witnesses;
  o.convex_witnesses = convex_witnesses;
  o.monotone_witnesses = monotone_witnesses;
  o.social_witnesses = social_witnesses;
  o.samples = samples;
  o.seed = seed;
  return o;
}

}  // namespace omg
