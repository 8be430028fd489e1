#include "mmes/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmes/entanglement.hpp"
#include "mmes/monogamy.hpp"
#include "mmes/nonlocality.hpp"
#include "mmes/parallel.hpp"

namespace mmes {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<Measure, std::string_view> kMeasureNames[] = {
    {Measure::negativity, "negativity"}, {Measure::min, "min"},           {Measure::m_indicator, "m_indicator"},
    {Measure::m_prime, "m_prime"},       {Measure::esd_line, "esd_line"}, {Measure::pt_spectrum, "pt_spectrum"},
};

struct Value {
  double numerical = kNan;
  double closed = kNan;
};

MinFamily c1c2_min_family(Family family) {
  switch (family) {
    case Family::dim4: return MinFamily::c1c2_dim4;
    case Family::dim6: return MinFamily::c1c2_dim6;
    case Family::dim8: return MinFamily::c1c2_dim8;
  }
  throw std::invalid_argument("unknown family");
}

Value evaluate(Measure measure, Family family, double p, double kt, const PureEnsemble& ens, double esd_time) {
  const ChannelParams params = damping_amplitudes(kt);
  const std::size_t side_a[] = {0};
  const auto c1c2 = [&] { return ens.reduce(pair_modes(Pair::c1c2)); };
  switch (measure) {
    case Measure::negativity: {
      Value v{negativity(c1c2(), side_a)};
      if (family == Family::dim4) v.closed = negativity_c1c2_closed(p, params);
      if (family == Family::dim6) v.closed = negativity_dim6_closed(p, params);
      return v;
    }
    case Measure::min: return {min_luo_fu(c1c2()), min_closed_form(c1c2_min_family(family), p, params)};
    case Measure::m_indicator:
      return {negativity_monogamy(p, kt, family), family == Family::dim4 ? negativity_monogamy_closed(p, kt) : kNan};
    case Measure::m_prime:
      return {min_distribution(p, kt, family), family == Family::dim4 ? min_distribution_closed(p, kt) : kNan};
    case Measure::esd_line:
      return {negativity(c1c2(), side_a) > 0.0 ? 1.0 : 0.0, kt < esd_time ? 1.0 : 0.0};
    case Measure::pt_spectrum: {
      Value v{eigvals_hermitian(partial_transpose(c1c2(), 0).matrix()).min()};
      if (family == Family::dim4) v.closed = pt_spectrum_c1c2_closed(p, kt).min();
      return v;
    }
  }
  throw std::invalid_argument("unknown measure");
}

}  // namespace

std::string_view to_string(Measure measure) {
  for (const auto& [m, name] : kMeasureNames)
    if (m == measure) return name;
  return "unknown";
}

Measure measure_from_string(std::string_view name) {
  for (const auto& [m, n] : kMeasureNames)
    if (n == name) return m;
  throw std::invalid_argument("unknown measure '" + std::string(name) +
                              "' (expected negativity, min, m_indicator, m_prime, esd_line or pt_spectrum)");
}

std::string_view to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

Format format_from_string(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void SweepSpec::validate() const {
  if (p_values.empty()) throw std::invalid_argument("sweep: p_values is empty");
  for (double p : p_values)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sweep: p value " + format_number(p) + " outside [0, 1]");
  if (!std::isfinite(kt_min) || !std::isfinite(kt_max) || kt_min < 0.0)
    throw std::invalid_argument("sweep: kt_min and kt_max must be finite with kt_min >= 0");
  if (kt_min > kt_max) throw std::invalid_argument("sweep: kt_min exceeds kt_max");
  if (!(kt_step > 0.0)) throw std::invalid_argument("sweep: kt_step must be positive");
  if (measures.empty()) throw std::invalid_argument("sweep: measures is empty");
}

std::vector<double> SweepSpec::kappa_t_grid() const { return arange(kt_min, kt_max, kt_step); }

Table sweep_table(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> kts = spec.kappa_t_grid();
  const bool wants_esd = std::find(spec.measures.begin(), spec.measures.end(), Measure::esd_line) != spec.measures.end();
  std::vector<double> esd_times(spec.p_values.size(), kNan);
  if (wants_esd)
    parallel_for(spec.p_values.size(), [&](std::size_t i) { esd_times[i] = esd_boundary(spec.family, spec.p_values[i]); });

  const std::size_t n_points = spec.p_values.size() * kts.size();
  std::vector<std::vector<Value>> values(n_points);
  parallel_for(n_points, [&](std::size_t i) {
    const std::size_t ip = i / kts.size();
    const double p = spec.p_values[ip], kt = kts[i % kts.size()];
    const PureEnsemble ens = evolve_ensemble(MmesSpec::for_family(spec.family, p), kt);
    for (Measure m : spec.measures) values[i].push_back(evaluate(m, spec.family, p, kt, ens, esd_times[ip]));
  });

  Table table;
  table.columns = {"p", "kappa_t", "measure", "numerical", "closed_form", "abs_diff"};
  double max_diff = -1.0;
  for (std::size_t i = 0; i < n_points; ++i)
    for (std::size_t k = 0; k < spec.measures.size(); ++k) {
      const Value& v = values[i][k];
      const double diff = std::abs(v.numerical - v.closed);
      if (!std::isnan(diff)) max_diff = std::max(max_diff, diff);
      table.add_row({spec.p_values[i / kts.size()], kts[i % kts.size()], std::string(to_string(spec.measures[k])),
                     v.numerical, v.closed, diff});
    }
  table.summary.emplace_back("family", std::string(to_string(spec.family)));
  table.summary.emplace_back("max_abs_diff", max_diff < 0.0 ? "n/a" : format_number(max_diff));
  return table;
}

void run_sweep(const SweepSpec& spec) {
  spec.validate();
  if (spec.output_path.empty()) throw std::invalid_argument("sweep: output path is empty");
  const Table table = sweep_table(spec);
  if (spec.format == Format::csv)
    write_csv(spec.output_path, table);
  else
    write_json(spec.output_path, table);
}

}  // namespace mmes
