#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptorder/cover.hpp"
#include "ptorder/errors.hpp"
#include "ptorder/magnus.hpp"
#include "ptorder/monodromy.hpp"
#include "ptorder/orders.hpp"
#include "ptorder/verify.hpp"

namespace py = pybind11;
using namespace ptorder;

namespace {

OrderConfig config_from_kwargs(const py::kwargs &kw)
{
	OrderConfig cfg;
	for (auto item : kw)
	{
		std::string key = py::cast<std::string>(item.first);
		if (key == "magnus_cap")
			cfg.magnus_cap = py::cast<int>(item.second);
		else if (key == "hard_cap")
			cfg.hard_cap = py::cast<int>(item.second);
		else if (key == "tau_positive")
			cfg.tau_positive = py::cast<bool>(item.second);
		else
			cfg.set(key, py::cast<std::string>(item.second));
	}
	return cfg;
}

py::dict cellsum_dict(const CellSum &c)
{
	py::dict d;
	for (const auto &[cell, k] : c.cells())
		d[py::make_tuple(cell.m, cell.n)] = k;
	return d;
}

py::object depth_obj(const Depth &d)
{
	switch (d.kind)
	{
	case Depth::Kind::Finite: return py::int_(d.value);
	case Depth::Kind::AtLeast: return py::str("at_least:" + std::to_string(d.value));
	default: return py::str("infinite");
	}
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "exact bi-orderings of once-punctured-torus bundle groups";

	py::register_exception<ParseError>(m, "WordParseError", PyExc_ValueError);
	py::register_exception<ConfigError>(m, "OrderConfigError", PyExc_ValueError);
	py::register_exception<NotInCommutatorSubgroup>(m, "NotInCommutatorSubgroup",
	                                                PyExc_ValueError);
	py::register_exception<ResourceLimit>(m, "ResourceLimitError", PyExc_RuntimeError);

	py::class_<Word>(m, "Word")
	    .def(py::init([](const std::string &text) { return parse_word(text); }),
	         py::arg("text"))
	    .def("__str__", [](const Word &w) { return render(w); })
	    .def("__repr__", [](const Word &w) { return "Word('" + render(w) + "')"; })
	    .def("__mul__", [](const Word &u, const Word &v) { return u * v; })
	    .def("__pow__", [](const Word &w, std::int64_t k) { return pow(w, k); })
	    .def("__eq__", [](const Word &u, const Word &v) { return u == v; })
	    .def("__hash__",
	         [](const Word &w) { return py::hash(py::str(render(w))); })
	    .def("__len__", &Word::length)
	    .def("inverse", &Word::inverse)
	    .def("is_identity", &Word::is_identity)
	    .def("abelianization", [](const Word &w) {
		    Vec2 v = abelianization(w);
		    return py::make_tuple(v.x, v.y);
	    });

	m.def("parse_word", &parse_word, py::arg("text"));
	m.def("render", &render, py::arg("word"));
	m.def("commutator", &commutator, py::arg("u"), py::arg("v"));
	m.def("conjugate", &conjugate, py::arg("x"), py::arg("w"));

	py::class_<Monodromy>(m, "Monodromy")
	    .def(py::init(
	             [](const std::string &tw) { return Monodromy::from_twists(tw); }),
	         py::arg("twists"))
	    .def_property_readonly("twists",
	                           [](const Monodromy &m_) { return m_.twists(); })
	    .def("apply", &Monodromy::apply, py::arg("word"), py::arg("power") = 1)
	    .def("image_a", [](const Monodromy &m_) { return m_.endo().image_a; })
	    .def("image_b", [](const Monodromy &m_) { return m_.endo().image_b; })
	    .def("matrix",
	         [](const Monodromy &m_) {
		         const Mat2 &A = m_.matrix();
		         auto big = [](const BigInt &v) {
			         return py::reinterpret_steal<py::int_>(
			             PyLong_FromString(v.str().c_str(), nullptr, 10));
		         };
		         return py::make_tuple(py::make_tuple(big(A.a), big(A.b)),
		                               py::make_tuple(big(A.c), big(A.d)));
	         })
	    .def("classification", [](const Monodromy &m_) {
		    Classification c = m_.classification();
		    py::dict d;
		    d["hyperbolic"] = c.hyperbolic;
		    d["untwisted"] = c.untwisted;
		    return d;
	    });

	m.def("magnus_depth",
	      [](const Word &w, int cap) { return depth_obj(depth(w, cap)); },
	      py::arg("word"), py::arg("cap") = 8);
	m.def("magnus_dump",
	      [](const Word &w, int cap) { return MagnusSeries::expand(w, cap).dump(); },
	      py::arg("word"), py::arg("cap") = 8);
	m.def("leading_part",
	      [](const Word &w, int cap) {
		      py::dict d;
		      for (const auto &[mono, coeff] : leading_part(w, cap))
			      d[py::str(mono)] = py::reinterpret_steal<py::int_>(
			          PyLong_FromString(coeff.str().c_str(), nullptr, 10));
		      return d;
	      },
	      py::arg("word"), py::arg("cap") = 8);
	m.def("in_lcs", &in_lcs, py::arg("word"), py::arg("n"), py::arg("cap") = 8);

	m.def("p2", [](const Word &w) { return cellsum_dict(p2(w)); }, py::arg("word"));
	m.def("p2_oracle", [](const Word &w) { return cellsum_dict(p2_oracle(w)); },
	      py::arg("word"));
	m.def("winding_total", [](const Word &w) { return p2(w).total(); },
	      py::arg("word"));

	py::class_<Order>(m, "Order")
	    .def(py::init([](const py::kwargs &kw) {
		    return Order::build(config_from_kwargs(kw));
	    }))
	    .def("sign",
	         [](const Order &o, const Word &w) { return to_string(o.sign(w)); },
	         py::arg("word"))
	    .def("compare",
	         [](const Order &o, const Word &u, const Word &v) {
		         return to_string(o.compare(u, v));
	         },
	         py::arg("u"), py::arg("v"))
	    .def("sign_bundle",
	         [](const Order &o, const Word &g, std::int64_t k) {
		         return to_string(o.sign_bundle({g, k}));
	         },
	         py::arg("g"), py::arg("k"))
	    .def("config_text", [](const Order &o) { return o.config().to_text(); });

	m.def("run_suite",
	      [](const std::string &suite, std::uint64_t samples, std::uint64_t seed,
	         const std::string &selector, const py::kwargs &kw) {
		      OrderConfig cfg = config_from_kwargs(kw);
		      std::optional<ConvexitySelector> sel;
		      if (!selector.empty())
			      sel = ConvexitySelector::parse(selector);
		      return run_suite(suite, cfg, samples, seed, sel).to_json();
	      },
	      py::arg("suite"), py::arg("samples") = 1000, py::arg("seed") = 0,
	      py::arg("selector") = "");
	m.def("check_lemma_witnesses", [](const py::kwargs &kw) {
		return check_lemma_witnesses(config_from_kwargs(kw)).to_json();
	});
}
