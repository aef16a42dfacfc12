#include "fvdec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace fvdec {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void set_key(Manifest& m, const std::string& key, const std::string& value) {
  for (auto& kv : m)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  m.emplace_back(key, value);
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "malformed CSV value '" + cell + "'");
    }
  }
  return out;
}

std::string order_cell(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_manifest(std::ostream& os, const Manifest& manifest) {
  for (const auto& [k, v] : manifest) os << "# " << k << " = " << v << '\n';
}

Manifest read_manifest(std::istream& is) {
  Manifest m;
  while (is.peek() == '#') {
    std::string line;
    std::getline(is, line);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    m.emplace_back(trim(line.substr(1, eq - 1)), trim(line.substr(eq + 1)));
  }
  return m;
}

std::string manifest_value(const Manifest& manifest, const std::string& key) {
  for (const auto& [k, v] : manifest)
    if (k == key) return v;
  throw Error(ErrorCode::InvalidArgument, "missing manifest key '" + key + "'");
}

template <int Dim>
void write_field_csv(std::ostream& os, const CellField<Dim>& field, const GasModel& gas,
                     Manifest manifest) {
  const Grid<Dim>& g = field.grid;
  set_key(manifest, "dim", std::to_string(Dim));
  set_key(manifest, "nx", std::to_string(g.nx));
  set_key(manifest, "ny", std::to_string(g.ny));
  set_key(manifest, "x_min", format_double(g.x_min));
  set_key(manifest, "x_max", format_double(g.x_max));
  if constexpr (Dim == 2) {
    set_key(manifest, "y_min", format_double(g.y_min));
    set_key(manifest, "y_max", format_double(g.y_max));
  }
  set_key(manifest, "time", format_double(field.time));
  set_key(manifest, "gamma", format_double(gas.gamma));
  write_manifest(os, manifest);
  os << (Dim == 1 ? "x,rho,mx,E,u,p\n" : "x,y,rho,mx,my,E,u,v,p\n");
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Conserved<Dim> u = field.get(i, j);
      os << format_double(g.x_center(i));
      if constexpr (Dim == 2) os << ',' << format_double(g.y_center(j));
      for (double v : u) os << ',' << format_double(v);
      const double rho = u[0];
      for (int d = 0; d < Dim; ++d) os << ',' << format_double(u[1 + d] / rho);
      os << ',' << format_double(pressure<Dim>(u, gas)) << '\n';
    }
}

template <int Dim>
CellField<Dim> read_field_csv(std::istream& is, Manifest* manifest_out) {
  const Manifest m = read_manifest(is);
  if (std::stoi(manifest_value(m, "dim")) != Dim)
    throw Error(ErrorCode::GridMismatch, "field file has a different dimension");
  Grid<Dim> g;
  g.nx = std::stoi(manifest_value(m, "nx"));
  g.ny = std::stoi(manifest_value(m, "ny"));
  g.x_min = std::stod(manifest_value(m, "x_min"));
  g.x_max = std::stod(manifest_value(m, "x_max"));
  if constexpr (Dim == 2) {
    g.y_min = std::stod(manifest_value(m, "y_min"));
    g.y_max = std::stod(manifest_value(m, "y_max"));
  }
  CellField<Dim> field(g);
  field.time = std::stod(manifest_value(m, "time"));
  std::string line;
  std::getline(is, line);  // column header
  const std::size_t first = Dim;  // conserved values follow the coordinates
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (!std::getline(is, line))
        throw Error(ErrorCode::GridMismatch, "field file has fewer rows than its grid");
      const std::vector<double> row = parse_row(line);
      if (row.size() < first + kNumVars<Dim>)
        throw Error(ErrorCode::InvalidArgument, "field file row has too few columns");
      Conserved<Dim> u;
      for (std::size_t k = 0; k < kNumVars<Dim>; ++k) u[k] = row[first + k];
      field.set(i, j, u);
    }
  if (manifest_out) *manifest_out = m;
  return field;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows,
                           Manifest manifest) {
  for (const ConvergenceRow& r : rows)
    if (r.crash) manifest.emplace_back("crash N=" + std::to_string(r.n), *r.crash);
  write_manifest(os, manifest);
  os << "N,L1,order,L2,order,Linf,order,cpu_time\n";
  for (const ConvergenceRow& r : rows) {
    os << r.n << ',';
    if (r.crash) {
      os << "crash,-,crash,-,crash,-,";
    } else {
      os << format_double(r.errors.l1) << ',' << order_cell(r.order_l1) << ','
         << format_double(r.errors.l2) << ',' << order_cell(r.order_l2) << ','
         << format_double(r.errors.linf) << ',' << order_cell(r.order_linf) << ',';
    }
    os << format_double(r.cpu_seconds) << '\n';
  }
}

double max_stable_sigma(std::vector<SweepRow> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.sigma < b.sigma; });
  double best = 0.0;
  for (const SweepRow& r : rows) {
    if (!r.completed) break;
    best = r.sigma;
  }
  return best;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows, Manifest manifest) {
  set_key(manifest, "max_stable_sigma", format_double(max_stable_sigma(rows)));
  write_manifest(os, manifest);
  os << "sigma,status,steps,final_time,cause\n";
  for (const SweepRow& r : rows) {
    std::string cause = r.cause;
    std::replace(cause.begin(), cause.end(), ',', ';');
    os << format_double(r.sigma) << ',' << (r.completed ? "completed" : "crashed") << ','
       << r.steps << ',' << format_double(r.final_time) << ',' << cause << '\n';
  }
}

void write_slice_csv(std::ostream& os, const std::vector<SlicePoint>& slice, const GasModel& gas,
                     Manifest manifest) {
  write_manifest(os, manifest);
  os << "s,x,y,rho,mx,my,E,u,v,p\n";
  for (const SlicePoint& p : slice) {
    os << format_double(p.s) << ',' << format_double(p.x) << ',' << format_double(p.y);
    for (double v : p.u) os << ',' << format_double(v);
    os << ',' << format_double(p.u[1] / p.u[0]) << ',' << format_double(p.u[2] / p.u[0]) << ','
       << format_double(pressure<2>(p.u, gas)) << '\n';
  }
}

void write_schlieren_csv(std::ostream& os, const std::vector<double>& values, int nx, int ny,
                         Manifest manifest) {
  set_key(manifest, "nx", std::to_string(nx));
  set_key(manifest, "ny", std::to_string(ny));
  write_manifest(os, manifest);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i) os << ',';
      os << format_double(values[static_cast<std::size_t>(j) * nx + i]);
    }
    os << '\n';
  }
}

void write_profile_csv(std::ostream& os, const CellField<1>& field, const GasModel& gas,
                       Manifest manifest) {
  write_manifest(os, manifest);
  os << "x,rho,u,p\n";
  for (int i = 0; i < field.grid.nx; ++i) {
    const Conserved<1> u = field.get(i);
    os << format_double(field.grid.x_center(i)) << ',' << format_double(u[0]) << ','
       << format_double(u[1] / u[0]) << ',' << format_double(pressure<1>(u, gas)) << '\n';
  }
}

template void write_field_csv<1>(std::ostream&, const CellField<1>&, const GasModel&, Manifest);
template void write_field_csv<2>(std::ostream&, const CellField<2>&, const GasModel&, Manifest);
template CellField<1> read_field_csv<1>(std::istream&, Manifest*);
template CellField<2> read_field_csv<2>(std::istream&, Manifest*);

}  // namespace fvdec
