#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qvote/properties.hpp"
#include "qvote/scenario.hpp"
#include "qvote/tactics.hpp"

namespace py = pybind11;
using namespace qvote;

namespace {

std::vector<OrderAmplitude> to_coeffs(const std::vector<std::pair<std::string, Complex>>& pairs) {
  std::vector<OrderAmplitude> out;
  out.reserve(pairs.size());
  for (const auto& [order, amp] : pairs) out.push_back({order, amp});
  return out;
}

// distributions keyed by order text read better from python
py::dict dist_dict(const std::vector<double>& dist, const PreferenceBasis& basis) {
  py::dict out;
  for (int i = 0; i < basis.dim(); ++i) {
    if (dist[i] > 0.0) out[py::str(basis.order_text(i))] = dist[i];
  }
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum voting constitutions: preference bases, state algebra, elections";

  // translators run newest-first: the base goes in before the subclasses
  py::register_exception<Error>(m, "QvError");
  py::register_exception<ParseError>(m, "QvParseError");
  py::register_exception<ZeroSupportError>(m, "ZeroSupport");
  py::register_exception<RevoteRequired>(m, "RevoteRequired");
  py::register_exception<NonPureInput>(m, "NonPureInput");
  py::register_exception<CycleError>(m, "CycleError");

  py::enum_<Rel>(m, "Rel").value("GT", Rel::GT).value("LT", Rel::LT).value("EQ", Rel::EQ);
  py::enum_<BasisMode>(m, "BasisMode")
      .value("STRICT", BasisMode::Strict)
      .value("WEAK", BasisMode::Weak);
  py::enum_<CyclePolicy>(m, "CyclePolicy")
      .value("ERROR", CyclePolicy::Error)
      .value("ALL_EQUAL", CyclePolicy::AllEqual);
  py::enum_<ConstitutionKind>(m, "ConstitutionKind")
      .value("QMR", ConstitutionKind::Qmr)
      .value("QMR2", ConstitutionKind::Qmr2)
      .value("QMR3", ConstitutionKind::Qmr3)
      .value("CLASSICAL_MR", ConstitutionKind::ClassicalMr);

  py::class_<CandidateSet>(m, "CandidateSet")
      .def(py::init<std::vector<std::string>>())
      .def("__len__", &CandidateSet::size)
      .def("label", &CandidateSet::label)
      .def("index", &CandidateSet::index)
      .def_property_readonly("labels", &CandidateSet::labels);

  py::class_<WeakOrder>(m, "WeakOrder")
      .def("relation", &WeakOrder::relation)
      .def("tier_of", &WeakOrder::tier_of)
      .def("tiers", &WeakOrder::tiers)
      .def_property_readonly("is_strict", &WeakOrder::is_strict)
      .def("__eq__", [](const WeakOrder& a, const WeakOrder& b) { return a == b; });

  py::class_<PreferenceBasis>(m, "PreferenceBasis")
      .def_property_readonly("dim", &PreferenceBasis::dim)
      .def_property_readonly("mode", &PreferenceBasis::mode)
      .def_property_readonly("candidates", &PreferenceBasis::candidates)
      .def("order", &PreferenceBasis::order)
      .def("order_text", &PreferenceBasis::order_text)
      .def("index_of", &PreferenceBasis::index_of)
      .def("index_of_text", &PreferenceBasis::index_of_text)
      .def("orders",
           [](const PreferenceBasis& b) {
             std::vector<std::string> out;
             for (int i = 0; i < b.dim(); ++i) out.push_back(b.order_text(i));
             return out;
           });

  m.def("enumerate_basis", &enumerate_basis, py::arg("candidates"), py::arg("mode"));
  m.def("parse_order", &parse_order, py::arg("text"), py::arg("candidates"));
  m.def("format_order", &format_order, py::arg("order"), py::arg("candidates"));
  m.def("reverse_order", &reverse_order);
  m.def("subspace_indices", &subspace_indices);

  py::class_<MajorityDigraph>(m, "MajorityDigraph")
      .def_readonly("num_nodes", &MajorityDigraph::num_nodes)
      .def("edge", &MajorityDigraph::edge);
  py::class_<SccList>(m, "SccList").def_readonly("components", &SccList::components);
  m.def("build_majority_digraph", &build_majority_digraph);
  m.def("tarjan_scc", &tarjan_scc);
  m.def("to_dot", &to_dot);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<uint64_t>())
      .def("uniform01", &RngStream::uniform01)
      .def("substream", &RngStream::substream);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init([](const Eigen::VectorXcd& amps, int arity, int single_dim) {
             return StateVector(amps, arity, single_dim);
           }),
           py::arg("amplitudes"), py::arg("arity"), py::arg("single_dim"))
      .def_static("basis_state", &StateVector::basis_state)
      .def_property_readonly("arity", &StateVector::arity)
      .def_property_readonly("single_dim", &StateVector::single_dim)
      .def_property_readonly("dim", &StateVector::dim)
      .def_property_readonly("amplitudes",
                             [](const StateVector& s) { return s.amplitudes(); });

  py::class_<DensityOperator>(m, "DensityOperator")
      .def(py::init([](const Eigen::MatrixXcd& mat, int arity, int single_dim) {
             return DensityOperator(mat, arity, single_dim);
           }),
           py::arg("matrix"), py::arg("arity"), py::arg("single_dim"))
      .def_static("from_pure", &DensityOperator::from_pure)
      .def_static("from_diagonal", &DensityOperator::from_diagonal)
      .def_property_readonly("arity", &DensityOperator::arity)
      .def_property_readonly("dim", &DensityOperator::dim)
      .def_property_readonly("matrix", [](const DensityOperator& d) { return d.matrix(); })
      .def("diagonal", &DensityOperator::diagonal)
      .def("trace", &DensityOperator::trace)
      .def("min_eigenvalue", &DensityOperator::min_eigenvalue)
      .def("validate", &DensityOperator::validate);

  m.def("tensor",
        [](const std::vector<StateVector>& states) { return tensor(states); });
  m.def("tensor_density",
        [](const std::vector<DensityOperator>& states) { return tensor(states); });
  m.def("partial_trace",
        [](const StateVector& joint, int keep) { return partial_trace(joint, keep); });
  m.def("partial_trace",
        [](const DensityOperator& joint, int keep) { return partial_trace(joint, keep); });
  m.def("projector", &projector);
  m.def("project_renormalize",
        [](const StateVector& s, const std::vector<int>& idx) {
          return project_renormalize(s, idx);
        });
  m.def("project_renormalize",
        [](const DensityOperator& s, const std::vector<int>& idx) {
          return project_renormalize(s, idx);
        });
  m.def("phase_damp", &phase_damp);
  m.def("born_distribution",
        [](const StateVector& s) { return born_distribution(s); });
  m.def("born_distribution",
        [](const DensityOperator& s) { return born_distribution(s); });
  m.def("sample", [](const StateVector& s, RngStream& rng) { return sample(s, rng); });
  m.def("sample", [](const DensityOperator& s, RngStream& rng) { return sample(s, rng); });
  m.def("joint_dim", &joint_dim);
  m.def("decode_joint_index", &decode_joint_index);
  m.def("encode_joint_index", &encode_joint_index);

  py::class_<Profile>(m, "Profile")
      .def_static("product",
                  [](const PreferenceBasis& basis, const std::vector<py::object>& voters) {
                    std::vector<VoterState> converted;
                    converted.reserve(voters.size());
                    for (const auto& v : voters) {
                      if (py::isinstance<StateVector>(v)) {
                        converted.emplace_back(v.cast<StateVector>());
                      } else {
                        converted.emplace_back(v.cast<DensityOperator>());
                      }
                    }
                    return Profile::product(basis, std::move(converted));
                  })
      .def_static("entangled",
                  [](const PreferenceBasis& basis, const StateVector& joint) {
                    return Profile::entangled(basis, joint);
                  })
      .def_property_readonly("num_voters", &Profile::num_voters)
      .def_property_readonly("basis", &Profile::basis)
      .def("marginal", &Profile::marginal)
      .def("joint_distribution", &Profile::joint_distribution);

  py::class_<SocietyOutcome>(m, "SocietyOutcome")
      .def_readonly("rho", &SocietyOutcome::rho)
      .def_readonly("pure", &SocietyOutcome::pure)
      .def_readonly("distribution", &SocietyOutcome::distribution)
      .def("distribution_by_order", [](const SocietyOutcome& o, const PreferenceBasis& basis) {
        return dist_dict(o.distribution, basis);
      });

  m.def("classical_mr",
        [](const std::vector<WeakOrder>& votes, int m, CyclePolicy policy) {
          return classical_mr(votes, m, policy);
        });
  m.def("qmr_basis_term", &qmr_basis_term);
  m.def("qmr", &qmr);
  m.def("qmr2", &qmr2);
  m.def("qmr3_sample", &qmr3_sample);
  m.def("qmr3_distribution", &qmr3_distribution);

  py::class_<SupportTriple>(m, "SupportTriple")
      .def_readonly("gt", &SupportTriple::gt)
      .def_readonly("lt", &SupportTriple::lt)
      .def_readonly("eq", &SupportTriple::eq);
  py::class_<SupportPattern>(m, "SupportPattern")
      .def_readonly("pairs", &SupportPattern::pairs);
  m.def("support_pattern", [](const DensityOperator& rho, const PreferenceBasis& basis) {
    return support_pattern(rho, basis);
  });

  py::class_<VoterVerdict>(m, "VoterVerdict")
      .def_readonly("voter", &VoterVerdict::voter)
      .def_readonly("dictator", &VoterVerdict::dictator)
      .def_readonly("witness", &VoterVerdict::witness);
  py::class_<PropertyReport>(m, "PropertyReport")
      .def_readonly("property", &PropertyReport::property)
      .def_readonly("passed", &PropertyReport::pass)
      .def_readonly("profiles_checked", &PropertyReport::profiles_checked)
      .def_readonly("voters", &PropertyReport::voters)
      .def("to_text", &PropertyReport::to_text);

  m.def("exhaustive_basis_profiles", &exhaustive_basis_profiles);
  m.def("random_profiles", &random_profiles);
  py::enum_<StateKind>(m, "StateKind")
      .value("PURE", StateKind::Pure)
      .value("MIXED", StateKind::Mixed)
      .value("BOTH", StateKind::Both);

  m.def("check_unanimity",
        [](const std::string& constitution, const std::vector<Profile>& family) {
          Constitution c = constitution == "qmr" ? make_qmr()
                           : constitution == "qmr2" ? make_qmr2()
                           : constitution == "qmr3" ? make_qmr3()
                           : constitution == "classical-mr" ? make_classical_mr_lifted()
                                                            : make_broken_constant();
          return check_unanimity(c, family);
        });
  m.def("check_qiia", [](const std::string& constitution, const std::vector<Profile>& family) {
    Constitution c = constitution == "qmr" ? make_qmr()
                     : constitution == "qmr2" ? make_qmr2()
                     : constitution == "qmr3" ? make_qmr3()
                     : constitution == "classical-mr" ? make_classical_mr_lifted()
                                                      : make_broken_constant();
    return check_qiia(c, family);
  });
  m.def("check_dictatorship",
        [](const std::string& constitution, const std::vector<Profile>& family) {
          Constitution c = constitution == "qmr" ? make_qmr()
                           : constitution == "qmr2" ? make_qmr2()
                           : constitution == "qmr3" ? make_qmr3()
                           : constitution == "classical-mr" ? make_classical_mr_lifted()
                                                            : make_broken_constant();
          return check_dictatorship(c, family);
        });

  py::class_<ArrowRecord>(m, "ArrowRecord")
      .def_readonly("dim", &ArrowRecord::dim)
      .def_readonly("outcome_distribution", &ArrowRecord::outcome_distribution)
      .def_readonly("max_uniform_deviation", &ArrowRecord::max_uniform_deviation)
      .def_readonly("conjecture_violated", &ArrowRecord::conjecture_violated)
      .def_readonly("unanimity", &ArrowRecord::unanimity)
      .def_readonly("qiia", &ArrowRecord::qiia)
      .def_readonly("transitivity", &ArrowRecord::transitivity)
      .def_readonly("dictatorship", &ArrowRecord::dictatorship)
      .def("to_text", &ArrowRecord::to_text);
  m.def("arrow_disproof", &arrow_disproof);

  py::class_<TacticComparison>(m, "TacticComparison")
      .def_readonly("distribution_a", &TacticComparison::distribution_a)
      .def_readonly("distribution_b", &TacticComparison::distribution_b)
      .def_readonly("tv_distance", &TacticComparison::tv_distance);

  m.def("build_pure_vote",
        [](const std::vector<std::pair<std::string, Complex>>& coeffs,
           const PreferenceBasis& basis) { return build_pure_vote(to_coeffs(coeffs), basis); });
  m.def("build_opposition_pair",
        [](const std::vector<std::pair<std::string, Complex>>& coeffs,
           const PreferenceBasis& basis) {
          return build_opposition_pair(to_coeffs(coeffs), basis);
        });
  m.def("build_party_line",
        [](const std::vector<std::pair<std::string, Complex>>& coeffs, int members,
           const PreferenceBasis& basis) {
          return build_party_line(to_coeffs(coeffs), members, basis);
        });
  m.def("build_w_analog", &build_w_analog);
  m.def("build_product_profile",
        [](const std::vector<std::vector<std::pair<std::string, Complex>>>& voters,
           const PreferenceBasis& basis) {
          std::vector<std::vector<OrderAmplitude>> converted;
          converted.reserve(voters.size());
          for (const auto& v : voters) converted.push_back(to_coeffs(v));
          return build_product_profile(converted, basis);
        });

  m.def("run_scenario_text", [](const std::string& text, bool records) {
    std::istringstream in(text);
    const Scenario sc = parse_scenario(in);
    return run_report(sc, records ? OutputFormat::Records : OutputFormat::Text);
  });
  m.def("run_demo", [](const std::string& name, int samples, BasisMode mode, uint64_t seed) {
    const DemoResult result = run_demo(name, samples, mode, seed);
    return py::make_tuple(result.pass, result.text);
  });
  m.def("demo_names", &demo_names);
}
