#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "koopman/types.hpp"

namespace koopman {

enum class MapKind { CircleRotation, TorusTranslation, CatMap };

/// A measure-preserving diffeomorphism of the torus [0,1)^dim together with
/// its invariant measure (Lebesgue for every built-in).
struct MapSystem {
  std::string name;
  MapKind kind = MapKind::CircleRotation;
  int dim = 1;
  Vec params;  // rotation/translation vector; unused for the cat map
};

MapSystem circle_rotation(double alpha);
MapSystem torus_translation(const Vec& alpha);
MapSystem cat_map();

/// Inverse golden mean (sqrt(5)-1)/2, the default rotation number.
double golden_alpha();

/// Reduce a coordinate into [0,1).
double wrap_unit(double x);

/// Distance on the circle with wrap-around.
double torus_distance(double a, double b);

Vec step(const MapSystem& sys, const Vec& x);
Vec step_inverse(const MapSystem& sys, const Vec& x);

/// x advanced by `count` applications of the map.
Vec advance(const MapSystem& sys, Vec x, int count);

struct Trajectory {
  Mat states;  // (n+1) x dim
  std::string system_name;
  std::uint64_t seed = 0;
};

Trajectory trajectory(const MapSystem& sys, const Vec& x0, int n);

enum class SampleMode { Iid, Ergodic };

struct SampleSet {
  Mat points;  // n x dim
  bool periodic_orbit_warning = false;
  int detected_period = 0;  // valid when the warning is set
};

/// Draws n points of the invariant measure. Iid mode samples it directly;
/// ergodic mode records a single orbit from a seeded start after a 100-step
/// burn-in. Output is a deterministic function of (system, n, seed, mode).
SampleSet sample_invariant(const MapSystem& sys, int n, std::uint64_t seed, SampleMode mode);

/// L1 distance between the binned histograms of `samples` and of their images
/// under the map, over bins^dim uniform torus cells; 0 means the empirical
/// measure is exactly invariant at this resolution, 2 means disjoint support.
double check_measure_preservation(const MapSystem& sys, const Mat& samples, int bins);

/// L1 histogram distance between two point clouds over a bins^d lattice on
/// the bounding box [lo, hi]. Shared helper for the pushforward-measure check
/// in embedded coordinates.
double l1_histogram_distance(const Mat& p, const Mat& q, const Vec& lo, const Vec& hi, int bins);

void write_states_csv(std::ostream& out, const MapSystem& sys, std::uint64_t seed, const Mat& states);
Mat read_states_csv(std::istream& in);

}  // namespace koopman
