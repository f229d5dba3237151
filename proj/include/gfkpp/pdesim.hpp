#pragma once

#include "gfkpp/model.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gfkpp {

inline constexpr double kBoxTolerance = 1e-8;
inline constexpr double kInstabilityTolerance = 1e-6;
inline constexpr int kMinCells = 64;

/// Cell-centred uniform grid.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_cells = kMinCells;

    double dx() const noexcept { return (x_max - x_min) / n_cells; }
    double x(int i) const noexcept { return x_min + (i + 0.5) * dx(); }
    void validate() const;
};

struct FieldFrame {
    double t = 0.0;
    std::vector<double> p;
};

struct SpeciesFrame {
    double t = 0.0;
    std::vector<double> n1;
    std::vector<double> n2;
};

/// 1 / (1 + exp((x - x0) / width)); width <= 0 selects 2 dx.
std::vector<double> smoothed_step(const Grid1D& g, double x0, double width = 0.0);

/// Explicit time step used by both solvers for the given coefficient bounds.
double stable_time_step(const Grid1D& g, double max_d, double max_abs_m);

/// Central diffusion, upwind advection, Heun stepping, zero-gradient ends.
/// Frames at t = 0, save_every, 2 save_every, ... and t_end.
std::vector<FieldFrame> simulate_gfkpp(const GfkppModel& m, const Grid1D& g, std::span<const double> ic,
                                       double t_end, double save_every);

/// Diffusion D, advection M and linear growth rate r of one genotype.
struct SpeciesParams {
    double d = 1.0;
    double m = 0.0;
    double r = 0.0;
};

std::vector<SpeciesFrame> simulate_two_species(const SpeciesParams& s1, const SpeciesParams& s2, const Grid1D& g,
                                               std::span<const double> n1, std::span<const double> n2,
                                               double t_end, double save_every);

/// max over frames of sup |n1 / (n1 + n2) - p|.
double consistency_deviation(std::span<const SpeciesFrame> full, std::span<const FieldFrame> reduced);

struct FrontTrace {
    std::vector<std::pair<double, double>> points;  ///< (t, x_front)
    double speed = 0.0;
    double residual = 0.0;  ///< RMS of the fit residuals
};

FrontTrace measure_front_speed(std::span<const FieldFrame> frames, const Grid1D& g, double level = 0.5,
                               double window = 0.5);

void write_frames_csv(std::ostream& os, const Grid1D& g, std::span<const FieldFrame> frames,
                      const std::string& comment);
void write_species_csv(std::ostream& os, const Grid1D& g, std::span<const SpeciesFrame> frames,
                       const std::string& comment);
void write_front_csv(std::ostream& os, const FrontTrace& trace, const std::string& comment);

}  // namespace gfkpp
