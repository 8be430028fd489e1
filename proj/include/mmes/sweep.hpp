#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mmes/dynamics.hpp"
#include "mmes/records.hpp"

namespace mmes {

enum class Measure { negativity, min, m_indicator, m_prime, esd_line, pt_spectrum };
enum class Format { csv, json };

std::string_view to_string(Measure measure);
Measure measure_from_string(std::string_view name);
std::string_view to_string(Format format);
Format format_from_string(std::string_view name);

struct SweepSpec {
  Family family = Family::dim4;
  std::vector<double> p_values;
  double kt_min = 0.0;
  double kt_max = 6.0;
  double kt_step = 0.02;
  std::vector<Measure> measures;
  std::string output_path;
  Format format = Format::csv;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::vector<double> kappa_t_grid() const;
};

// Columns p, kappa_t, measure, numerical, closed_form, abs_diff; rows in
// p-major, then kappa_t, then measure order. closed_form is nan where no
// closed form exists for the family. The summary holds max_abs_diff over
// rows that have one.
//
//   negativity   N_c1c2
//   min          MIN_c1c2
//   m_indicator  M
//   m_prime      M'
//   esd_line     1 while c1c2 is entangled, else 0 (closed form: kappa_t < esd_boundary)
//   pt_spectrum  smallest eigenvalue of rho_c1c2^{T_c1}
Table sweep_table(const SweepSpec& spec);

// Validates, computes and writes spec.output_path.
void run_sweep(const SweepSpec& spec);

}  // namespace mmes
