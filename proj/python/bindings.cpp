#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dvt/burst_fixed.hpp"
#include "dvt/burst_le2.hpp"
#include "dvt/diff_svt.hpp"
#include "dvt/diff_vt.hpp"
#include "dvt/error_model.hpp"
#include "dvt/errors.hpp"
#include "dvt/rll.hpp"
#include "dvt/sequence.hpp"
#include "dvt/tenengolts.hpp"

namespace py = pybind11;
using dvt::Symbol;
using dvt::Word;
using Symbols = std::vector<Symbol>;

namespace {

Word word(unsigned q, const Symbols& s) { return Word(q, s); }

py::dict report(const dvt::DecodeReport& r) {
  py::dict d;
  d["recovered"] = r.recovered.vec();
  d["case_tag"] = std::string(dvt::to_string(r.case_tag));
  d["delta"] = r.delta;
  d["s"] = r.s;
  d["gamma"] = r.gamma;
  d["position"] = r.position;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "differential VT codes for deletions, insertions and bursts";

  py::register_exception<dvt::DomainError>(m, "DomainError", PyExc_ValueError);
  auto decode = py::register_exception<dvt::DecodeError>(m, "DecodeError", PyExc_RuntimeError);
  py::register_exception<dvt::InternalInvariantViolation>(m, "InternalInvariantViolation", decode.ptr());
  py::register_exception<dvt::CapacityError>(m, "CapacityError", PyExc_RuntimeError);

  m.def("diff", [](const Symbols& w, unsigned q) { return dvt::diff(word(q, w)).vec(); }, py::arg("w"), py::arg("q"));
  m.def("diff_inv", [](const Symbols& y, unsigned q) { return dvt::diff_inv(word(q, y)).vec(); }, py::arg("y"),
        py::arg("q"));
  m.def("vt_syndrome", [](const Symbols& w, std::uint64_t mod) { return dvt::vt_weight(w) % mod; }, py::arg("w"),
        py::arg("modulus"));
  m.def("max_run", [](const Symbols& w) { return dvt::max_run(std::span<const Symbol>(w)); });
  m.def("delete", [](const Symbols& w, unsigned q, std::size_t start, std::size_t length) {
        return dvt::apply(word(q, w), dvt::ErrorSpec::deletion(start, length)).vec();
      },
      py::arg("w"), py::arg("q"), py::arg("start"), py::arg("length") = 1);
  m.def("insert", [](const Symbols& w, unsigned q, std::size_t after, const Symbols& block) {
        return dvt::apply(word(q, w), dvt::ErrorSpec::insertion(after, block)).vec();
      },
      py::arg("w"), py::arg("q"), py::arg("after"), py::arg("symbols"));

  py::class_<dvt::DiffVtCode>(m, "DiffVtCode")
      .def(py::init<unsigned, std::size_t, std::uint64_t, std::uint64_t>(), py::arg("q"), py::arg("n"), py::arg("a"),
           py::arg("modulus") = 0)
      .def_property_readonly("q", &dvt::DiffVtCode::q)
      .def_property_readonly("n", &dvt::DiffVtCode::n)
      .def_property_readonly("a", &dvt::DiffVtCode::a)
      .def_property_readonly("message_length", &dvt::DiffVtCode::message_length)
      .def_property_readonly("check_positions", &dvt::DiffVtCode::check_positions)
      .def("is_member", [](const dvt::DiffVtCode& c, const Symbols& w) { return c.is_member(word(c.q(), w)); })
      .def("encode", [](const dvt::DiffVtCode& c, const Symbols& msg) { return c.encode(word(c.q(), msg)).vec(); })
      .def("extract_message",
           [](const dvt::DiffVtCode& c, const Symbols& cw) { return c.extract_message(word(c.q(), cw)).vec(); })
      .def("decode", [](const dvt::DiffVtCode& c, const Symbols& r) { return report(c.decode(word(c.q(), r))); })
      .def("enumerate", [](const dvt::DiffVtCode& c) {
        std::vector<Symbols> out;
        for (const Word& w : c.enumerate()) out.push_back(w.vec());
        return out;
      });

  py::class_<dvt::DiffSvtCode>(m, "DiffSvtCode")
      .def(py::init<unsigned, std::size_t, std::size_t, std::uint64_t, std::uint64_t>(), py::arg("q"), py::arg("n"),
           py::arg("P"), py::arg("a"), py::arg("b"))
      .def_property_readonly("message_length", &dvt::DiffSvtCode::message_length)
      .def("is_member", [](const dvt::DiffSvtCode& c, const Symbols& w) { return c.is_member(word(c.q(), w)); })
      .def("encode", [](const dvt::DiffSvtCode& c, const Symbols& msg) { return c.encode(word(c.q(), msg)).vec(); })
      .def("extract_message",
           [](const dvt::DiffSvtCode& c, const Symbols& cw) { return c.extract_message(word(c.q(), cw)).vec(); })
      .def("decode_windowed",
           [](const dvt::DiffSvtCode& c, const Symbols& r, std::size_t lo, std::size_t hi) {
             return c.decode_windowed(word(c.q(), r), lo, hi).vec();
           },
           py::arg("received"), py::arg("lo"), py::arg("hi"));

  py::class_<dvt::RllCodec>(m, "RllCodec")
      .def(py::init<unsigned, std::size_t>(), py::arg("q"), py::arg("n"))
      .def_property_readonly("run_limit", &dvt::RllCodec::run_limit)
      .def("encode", [](const dvt::RllCodec& c, const Symbols& msg) { return c.encode(word(c.q(), msg)).vec(); })
      .def("decode", [](const dvt::RllCodec& c, const Symbols& cw) { return c.decode(word(c.q(), cw)).vec(); });

  py::class_<dvt::ShortenedBurstCode>(m, "BurstCode")
      .def(py::init<unsigned, std::size_t, std::size_t, std::uint64_t, std::uint64_t, std::uint64_t>(), py::arg("q"),
           py::arg("n"), py::arg("t"), py::arg("a1") = 0, py::arg("a2") = 0, py::arg("b") = 0)
      .def_property_readonly("message_length", &dvt::ShortenedBurstCode::message_length)
      .def_property_readonly("padding", &dvt::ShortenedBurstCode::padding)
      .def_property_readonly("window", [](const dvt::ShortenedBurstCode& c) { return c.inner().window(); })
      .def("encode", [](const dvt::ShortenedBurstCode& c, const Symbols& msg) {
        return c.encode_burst(word(c.inner().q(), msg)).vec();
      })
      .def("decode", [](const dvt::ShortenedBurstCode& c, const Symbols& r) {
        return c.decode_message(word(c.inner().q(), r)).vec();
      });

  py::class_<dvt::MarkerCode>(m, "MarkerCode")
      .def(py::init<unsigned, std::size_t, std::size_t>(), py::arg("q"), py::arg("n"), py::arg("P"))
      .def_property_readonly("message_length", &dvt::MarkerCode::message_length)
      .def("encode", [](const dvt::MarkerCode& c, const Symbols& msg) { return c.encode(word(c.q(), msg)).vec(); })
      .def("decode",
           [](const dvt::MarkerCode& c, const Symbols& r, std::optional<std::pair<std::size_t, std::size_t>> window) {
             return c.decode(word(c.q(), r), window).vec();
           },
           py::arg("received"), py::arg("window") = py::none());

  m.def("best_coset_size", [](unsigned q, std::size_t n, const std::string& family) {
        const auto f = family == "tenengolts" ? dvt::CodeFamily::tenengolts : dvt::CodeFamily::diff_vt;
        if (family != "tenengolts" && family != "diff_vt") throw dvt::DomainError("family is diff_vt or tenengolts");
        const auto b = dvt::best_coset_size(q, n, f);
        py::dict d;
        d["a"] = b.a;
        d["b"] = b.b;
        d["size"] = b.size;
        d["pigeonhole"] = b.pigeonhole;
        return d;
      },
      py::arg("q"), py::arg("n"), py::arg("family") = "diff_vt");
}
