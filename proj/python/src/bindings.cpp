// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jtcal/calibrator.hpp"
#include "jtcal/channel.hpp"
#include "jtcal/codebook.hpp"
#include "jtcal/harness.hpp"
#include "jtcal/link_eval.hpp"
#include "jtcal/phase.hpp"
#include "jtcal/scenario.hpp"

namespace py = pybind11;
using namespace jtcal;

namespace {

using ComplexArray = py::array_t<cdouble, py::array::c_style | py::array::forcecast>;

// 1-D input is read as a column.
CMatrix to_matrix(const ComplexArray& a) {
  if (a.ndim() == 1) return CMatrix(static_cast<std::size_t>(a.shape(0)), 1, {a.data(), a.data() + a.size()});
  if (a.ndim() != 2) throw std::invalid_argument("expected a 1-D or 2-D complex array");
  return CMatrix(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)),
                 {a.data(), a.data() + a.size()});
}

ComplexArray to_array(const CMatrix& m) {
  ComplexArray out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v(r, c) = m(r, c);
  return out;
}

template <class F>
std::string render(F&& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inter-cell reciprocity error estimation from PMI feedback";
  m.attr("PI") = kPi;
  m.attr("SUCCESS_TOLERANCE") = kSuccessTolerance;


  py::enum_<Fading>(m, "Fading").value("FLAT", Fading::FlatRayleigh).value("EPA", Fading::EpaTapped);
  py::enum_<CombineMode>(m, "CombineMode")
      .value("SUMMED", CombineMode::SummedPorts)
      .value("CONCATENATED", CombineMode::ConcatenatedPorts);
  py::enum_<CodebookFamily>(m, "CodebookFamily").value("REL8", CodebookFamily::Rel8).value("DFT", CodebookFamily::Dft);
  py::enum_<SweepAxis>(m, "SweepAxis")
      .value("PERIOD", SweepAxis::Period)
      .value("SNR", SweepAxis::Snr)
      .value("PORTS", SweepAxis::Ports)
      .value("PHASE", SweepAxis::TruePhase);

  py::class_<ChannelConfig>(m, "ChannelConfig")
      .def(py::init<>())
      .def_static("flat", &ChannelConfig::flat)
      .def_static("epa", &ChannelConfig::epa)
      .def_readwrite("n_tx_per_cell", &ChannelConfig::n_tx_per_cell)
      .def_readwrite("n_rx_ue", &ChannelConfig::n_rx_ue)
      .def_readwrite("fading", &ChannelConfig::fading)
      .def_readwrite("carrier_hz", &ChannelConfig::carrier_hz)
      .def_readwrite("doppler_hz", &ChannelConfig::doppler_hz)
      .def_readwrite("n_subcarriers", &ChannelConfig::n_subcarriers)
      .def_readwrite("sample_interval_s", &ChannelConfig::sample_interval_s)
      .def_readwrite("sample_rate_hz", &ChannelConfig::sample_rate_hz)
      .def("validate", &ChannelConfig::validate);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<>())
      .def_readwrite("channel", &Scenario::channel)
      .def_readwrite("combine_mode", &Scenario::combine_mode)
      .def_readwrite("ports_per_cell", &Scenario::ports_per_cell)
      .def_readwrite("codebook", &Scenario::codebook)
      .def_readwrite("dft_size", &Scenario::dft_size)
      .def_readwrite("snr_db", &Scenario::snr_db)
      .def_readwrite("srs_snr_db", &Scenario::srs_snr_db)
      .def_readwrite("delta_phase_true", &Scenario::delta_phase_true)
      .def_readwrite("delta_amp_true", &Scenario::delta_amp_true)
      .def_readwrite("period_frames", &Scenario::period_frames)
      .def_readwrite("n_hypotheses", &Scenario::n_hypotheses)
      .def_readwrite("feedback_delay_frames", &Scenario::feedback_delay_frames)
      .def_readwrite("n_runs", &Scenario::n_runs)
      .def_readwrite("base_seed", &Scenario::base_seed)
      .def("validate", &Scenario::validate);

  py::class_<VoteHistogram>(m, "VoteHistogram")
      .def_readonly("counts", &VoteHistogram::counts)
      .def_readonly("m", &VoteHistogram::m);

  py::class_<FrameRecord>(m, "FrameRecord")
      .def_readonly("histogram", &FrameRecord::histogram)
      .def_property_readonly("pmi_ue", [](const FrameRecord& f) { return f.pmi_ue.index; })
      .def_readonly("estimate", &FrameRecord::estimate);

  py::class_<CalibrationTrace>(m, "CalibrationTrace")
      .def_readonly("seed", &CalibrationTrace::seed)
      .def_readonly("frames", &CalibrationTrace::frames)
      .def_readonly("estimate", &CalibrationTrace::estimate)
      .def_readonly("error", &CalibrationTrace::error)
      .def_readonly("unique_peak", &CalibrationTrace::unique_peak);

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("scenario", &ExperimentResult::scenario)
      .def_readonly("runs", &ExperimentResult::runs)
      .def_readonly("success_fraction", &ExperimentResult::success_fraction)
      .def_readonly("mean_abs_error", &ExperimentResult::mean_abs_error)
      .def_readonly("error_variance", &ExperimentResult::error_variance)
      .def_readonly("unique_peak_fraction", &ExperimentResult::unique_peak_fraction)
      .def_readonly("estimate_histogram", &ExperimentResult::estimate_histogram)
      .def("to_csv", [](const ExperimentResult& r) { return render([&](std::ostream& os) { write_calibration_csv(os, r); }); });

  py::class_<SweepPoint>(m, "SweepPoint").def_readonly("value", &SweepPoint::value).def_readonly("result", &SweepPoint::result);

  py::class_<LinkSweepConfig>(m, "LinkSweepConfig")
      .def(py::init<>())
      .def_readwrite("n_tx", &LinkSweepConfig::n_tx)
      .def_readwrite("n_runs", &LinkSweepConfig::n_runs)
      .def_readwrite("base_seed", &LinkSweepConfig::base_seed)
      .def_readwrite("equal_norm", &LinkSweepConfig::equal_norm)
      .def_readwrite("include_uniform", &LinkSweepConfig::include_uniform);

  py::class_<LinkGainRow>(m, "LinkGainRow")
      .def_readonly("label", &LinkGainRow::label)
      .def_readonly("phase", &LinkGainRow::phase)
      .def_readonly("mean_power", &LinkGainRow::mean_power)
      .def_readonly("gain_db", &LinkGainRow::gain_db);

  m.def("wrap_phase", &wrap_phase, py::arg("x"));
  m.def("parse_phase", &parse_phase, py::arg("text"));
  m.def("hypothesis_grid", [](std::size_t n) { return hypothesis_grid(n).phases; }, py::arg("n") = 16);

  m.def("run_calibration", &run_calibration, py::arg("scenario"), py::arg("seed"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_experiment", &run_experiment, py::arg("scenario"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "run_sweep",
      [](const Scenario& s, SweepAxis axis, std::vector<double> values, unsigned threads) {
        return run_sweep(s, axis, values, threads);
      },
      py::arg("scenario"), py::arg("axis"), py::arg("values"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "select_pmi",
      [](const ComplexArray& h, std::size_t n_ports) { return select_pmi(to_matrix(h), default_codebook(n_ports)).index; },
      py::arg("h_eff"), py::arg("n_ports"), "PMI index in the default codebook for n_ports");
  m.def(
      "codebook",
      [](std::size_t n_ports) {
        const Codebook cb = default_codebook(n_ports);
        std::vector<ComplexArray> out;
        for (const auto& w : cb.vectors()) out.push_back(to_array(w));
        return out;
      },
      py::arg("n_ports"));

  m.def(
      "mrt_weights",
      [](const ComplexArray& h1_ul, const ComplexArray& h2_ul, double delta_amp, double delta_phase) {
        const auto w = mrt_weights(to_matrix(h1_ul), to_matrix(h2_ul), CjtError{delta_amp, delta_phase});
        return py::make_tuple(to_array(w.w1), to_array(w.w2));
      },
      py::arg("h1_ul"), py::arg("h2_ul"), py::arg("delta_amp") = 1.0, py::arg("delta_phase") = 0.0);
  m.def(
      "received_signal",
      [](const ComplexArray& h1_dl, const ComplexArray& h2_dl, const ComplexArray& w1, const ComplexArray& w2,
         cdouble x) {
        return to_array(received_signal(to_matrix(h1_dl), to_matrix(h2_dl), JtWeights{to_matrix(w1), to_matrix(w2)}, x));
      },
      py::arg("h1_dl"), py::arg("h2_dl"), py::arg("w1"), py::arg("w2"), py::arg("x") = cdouble{1.0});
  m.def("coherent_gain", &coherent_gain, py::arg("residual_phase"));
  m.def("coherent_gain_db", &coherent_gain_db, py::arg("residual_phase"));
  m.def(
      "evaluate_residual_sweep",
      [](const LinkSweepConfig& cfg, std::vector<double> phases) { return evaluate_residual_sweep(cfg, phases); },
      py::arg("config"), py::arg("phases"), py::call_guard<py::gil_scoped_release>());
}
