#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "retone/audio.hpp"
#include "retone/contour.hpp"
#include "retone/corpus.hpp"
#include "retone/evaluation.hpp"
#include "retone/selftest.hpp"
#include "retone/training.hpp"

namespace py = pybind11;
using namespace retone;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

AudioSegment to_audio(const FloatArray& samples, int sample_rate) {
  if (samples.ndim() != 1) throw ArgumentError("audio must be a 1-d float array");
  AudioSegment a;
  a.sample_rate = sample_rate;
  auto r = samples.unchecked<1>();
  a.samples.resize(static_cast<size_t>(r.shape(0)));
  for (py::ssize_t i = 0; i < r.shape(0); ++i) a.samples[static_cast<size_t>(i)] = r(i);
  return a;
}

py::array_t<float> to_np(const std::vector<float>& v) {
  py::array_t<float> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

PitchContour to_contour(const FloatArray& f0, const FloatArray& voiced, double hop_s) {
  if (f0.ndim() != 1 || voiced.ndim() != 1 || f0.shape(0) != voiced.shape(0))
    throw ArgumentError("f0 and voiced must be 1-d arrays of equal length");
  PitchContour c;
  c.hop_s = hop_s;
  auto rf = f0.unchecked<1>();
  auto rv = voiced.unchecked<1>();
  for (py::ssize_t i = 0; i < rf.shape(0); ++i) {
    bool on = rv(i) > 0.5f;
    c.voiced.push_back(on ? 1 : 0);
    c.f0_hz.push_back(on ? rf(i) : 0.0f);
  }
  return c;
}

py::tuple contour_to_py(const PitchContour& c) {
  py::array_t<float> f0 = to_np(c.f0_hz);
  py::array_t<uint8_t> voiced(static_cast<py::ssize_t>(c.voiced.size()));
  std::copy(c.voiced.begin(), c.voiced.end(), voiced.mutable_data());
  return py::make_tuple(f0, voiced);
}

struct PyModel {
  RunConfig cfg;
  nn::ParamStore ps;
  std::unique_ptr<Generator> gen;

  explicit PyModel(const std::string& ckpt_dir) {
    cfg = load_config_file(ckpt_dir + "/config.ini");
    gen = std::make_unique<Generator>(cfg.gen, ps, cfg.train.seed);
    ps.copy_values_from(nn::read_tensor_map(ckpt_dir + "/params.bin"), false);
  }

  AudioSegment prepare(const FloatArray& samples, int sample_rate) const {
    AudioSegment a = to_audio(samples, sample_rate);
    if (a.sample_rate != cfg.gen.sample_rate) a = resample(a, cfg.gen.sample_rate);
    return a;
  }

  PitchContour track(const AudioSegment& a) const {
    F0ExtractConfig fc;
    fc.hop_size = cfg.gen.hop_size;
    return extract_f0(a, fc);
  }

  py::array_t<float> synth(const FloatArray& samples, int sample_rate, uint64_t seed) const {
    AudioSegment a = prepare(samples, sample_rate);
    return to_np(gen->synthesize(a, track(a), seed).samples);
  }

  py::array_t<float> synth_with_contour(const FloatArray& samples, int sample_rate,
                                        const FloatArray& f0, const FloatArray& voiced,
                                        uint64_t seed) const {
    AudioSegment a = prepare(samples, sample_rate);
    PitchContour c =
        to_contour(f0, voiced, static_cast<double>(cfg.gen.hop_size) / cfg.gen.sample_rate);
    return to_np(gen->synthesize(a, c, seed).samples);
  }

  py::array_t<float> shift(const FloatArray& samples, int sample_rate, double semitones,
                           uint64_t seed) const {
    AudioSegment a = prepare(samples, sample_rate);
    return to_np(gen->synthesize(a, global_shift(track(a), semitones), seed).samples);
  }

  py::tuple retune(const FloatArray& samples, int sample_rate, const FloatArray& ref_samples,
                   int ref_sample_rate, uint64_t seed) const {
    AudioSegment a = prepare(samples, sample_rate);
    AudioSegment ref = prepare(ref_samples, ref_sample_rate);
    TemplateRetuneResult res = template_retune(track(a), track(ref));
    py::array_t<float> audio = to_np(gen->synthesize(a, res.contour, seed).samples);
    return py::make_tuple(audio, res.copied_frames, res.kept_frames);
  }
};

}  // namespace

PYBIND11_MODULE(_retone, m) {
  m.doc() = "singing voice pitch manipulation core";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def(
      "make_corpus",
      [](const std::string& out_dir, int utterances, double min_dur, double max_dur,
         uint64_t seed) {
        SynthCorpusSpec spec;
        spec.n_utterances = utterances;
        spec.min_dur_s = min_dur;
        spec.max_dur_s = max_dur;
        spec.seed = seed;
        return generate_synth_corpus(spec, out_dir);
      },
      py::arg("out_dir"), py::arg("utterances") = 8, py::arg("min_dur") = 4.0,
      py::arg("max_dur") = 10.0, py::arg("seed") = 1,
      "Generate a synthetic corpus; returns the manifest path.");

  m.def(
      "extract_f0",
      [](const FloatArray& samples, int sample_rate, int hop) {
        F0ExtractConfig fc;
        fc.hop_size = hop;
        return contour_to_py(extract_f0(to_audio(samples, sample_rate), fc));
      },
      py::arg("samples"), py::arg("sample_rate"), py::arg("hop") = 512,
      "Track f0; returns (f0_hz, voiced) frame arrays.");

  m.def(
      "global_shift",
      [](const FloatArray& f0, const FloatArray& voiced, double semitones, double hop_s) {
        return contour_to_py(global_shift(to_contour(f0, voiced, hop_s), semitones));
      },
      py::arg("f0"), py::arg("voiced"), py::arg("semitones"), py::arg("hop_s") = 512.0 / 44100.0);

  m.def(
      "selftest",
      []() {
        py::list out;
        for (const SelfTestResult& r : run_selftests())
          out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
      },
      "Run the built-in checks; returns [(name, passed, detail)].");

  py::class_<PyModel>(m, "Model")
      .def(py::init<const std::string&>(), py::arg("checkpoint_dir"))
      .def_property_readonly("sample_rate",
                             [](const PyModel& s) { return s.cfg.gen.sample_rate; })
      .def_property_readonly("hop_size", [](const PyModel& s) { return s.cfg.gen.hop_size; })
      .def("synth", &PyModel::synth, py::arg("samples"), py::arg("sample_rate"),
           py::arg("seed") = 0, "Resynthesize audio with its own tracked contour.")
      .def("synth_with_contour", &PyModel::synth_with_contour, py::arg("samples"),
           py::arg("sample_rate"), py::arg("f0"), py::arg("voiced"), py::arg("seed") = 0)
      .def("shift", &PyModel::shift, py::arg("samples"), py::arg("sample_rate"),
           py::arg("semitones"), py::arg("seed") = 0)
      .def("retune", &PyModel::retune, py::arg("samples"), py::arg("sample_rate"),
           py::arg("ref_samples"), py::arg("ref_sample_rate"), py::arg("seed") = 0,
           "Returns (audio, copied_frames, kept_frames).");
}
