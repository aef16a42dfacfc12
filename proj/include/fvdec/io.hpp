#pragma once

// CSV interchange: field snapshots, convergence tables, stability sweeps,
// slices and Schlieren images.  Every file starts with '#'-prefixed
// "key = value" manifest lines; floats use 17 significant digits.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fvdec/benchmarks.hpp"

namespace fvdec {

using Manifest = std::vector<std::pair<std::string, std::string>>;

std::string format_double(double v);

void write_manifest(std::ostream& os, const Manifest& manifest);

/// Reads leading '#' lines of the form "# key = value"; stops at the first
/// line that does not start with '#'.  Other comment lines are skipped.
Manifest read_manifest(std::istream& is);

/// Value for a key, or throws InvalidArgument naming the missing key.
std::string manifest_value(const Manifest& manifest, const std::string& key);

/// Columns x[,y],rho,mx[,my],E,u[,v],p, one row per interior cell, x fastest.
/// The manifest is extended with the grid description needed to read it back.
template <int Dim>
void write_field_csv(std::ostream& os, const CellField<Dim>& field, const GasModel& gas,
                     Manifest manifest);

/// Reads a field written by write_field_csv (no ghost layers).
template <int Dim>
CellField<Dim> read_field_csv(std::istream& is, Manifest* manifest = nullptr);

/// Columns N,L1,order,L2,order,Linf,order,cpu_time.  Orders are "-" where
/// undefined; crashed rows carry "crash" in the error columns and their cause
/// in the manifest.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows,
                           Manifest manifest);

struct SweepRow {
  double sigma = 0.0;
  bool completed = false;
  int steps = 0;
  double final_time = 0.0;
  std::string cause;
};

/// Columns sigma,status,steps,final_time,cause; the manifest records the
/// largest sigma for which every smaller tested sigma also completed.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, Manifest manifest);

/// Largest sigma such that it and all smaller tested values completed; 0 if none.
double max_stable_sigma(std::vector<SweepRow> rows);

/// Columns s,x,y,rho,mx,my,E,u,v,p.
void write_slice_csv(std::ostream& os, const std::vector<SlicePoint>& slice, const GasModel& gas,
                     Manifest manifest);

/// ny lines of nx comma-separated values; line j holds row j (bottom first).
void write_schlieren_csv(std::ostream& os, const std::vector<double>& values, int nx, int ny,
                         Manifest manifest);

/// Columns x,rho,u,p (reference datasets).
void write_profile_csv(std::ostream& os, const CellField<1>& field, const GasModel& gas,
                       Manifest manifest);

}  // namespace fvdec
