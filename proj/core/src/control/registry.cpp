#include "symdefect/control/registry.hpp"

#include <stdexcept>

#include "symdefect/integrators/steppers.hpp"
#include "symdefect/problems/cubic_nls.hpp"
#include "symdefect/problems/rosen_zener.hpp"
#include "symdefect/problems/scalar_problems.hpp"

namespace symdefect::control {

namespace {

using defect::DefectKind;
using defect::ExpVariant;

[[noreturn]] void mismatch(std::string_view scheme, const ProblemSetup& setup,
                           std::string_view what) {
  throw std::invalid_argument("scheme '" + std::string(scheme) + "' " + std::string(what) +
                              " (problem '" + setup.name + "')");
}

template <typename P>
std::shared_ptr<const P> as(const ProblemSetup& setup) {
  return std::dynamic_pointer_cast<const P>(setup.problem);
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"nls-soliton", "nls-two-soliton", "rosen-zener", "toy-split", "scalar-quadratic"};
}

std::vector<std::string> scheme_names() {
  return {"imr", "strang", "emb43aks", "expmid", "cf4", "magnus4"};
}

ProblemSetup make_problem(std::string_view name) {
  ProblemSetup s;
  s.name = std::string(name);
  if (name == "nls-soliton" || name == "nls-two-soliton") {
    problems::CubicNlsSpec spec;
    spec.initial = name == "nls-soliton" ? problems::CubicNlsSpec::Initial::single_soliton
                                         : problems::CubicNlsSpec::Initial::two_soliton;
    auto nls = problems::nls_build(spec);
    s.problem = nls;
    s.initial_state = nls->initial_state();
    s.reference_scheme = "emb43aks";
    if (name == "nls-soliton") {
      s.exact_trajectory = [nls](double t) { return nls->soliton_on_grid(t); };
    }
  } else if (name == "rosen-zener") {
    auto rz = problems::rosen_zener_build({});
    s.problem = rz;
    s.initial_state = rz->initial_state();
    s.reference_scheme = "magnus4";
  } else if (name == "toy-split") {
    auto toy = problems::toy_split_build();
    s.problem = toy;
    s.initial_state = ComplexVector{1.0};
    s.exact_flow = [toy](double t0, double t1, const ComplexVector& u) {
      return toy->exact_flow(t1 - t0, u);
    };
    s.reference_scheme = "emb43aks";
  } else if (name == "scalar-quadratic") {
    auto q = std::make_shared<const problems::QuadraticDecay>(1);
    s.problem = q;
    s.initial_state = ComplexVector{1.0};
    s.exact_flow = [q](double t0, double t1, const ComplexVector& u) {
      return q->exact_flow(t1 - t0, u);
    };
    s.reference_scheme = "imr";
  } else {
    throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  }
  return s;
}

Method make_method(const ProblemSetup& setup, std::string_view scheme, DefectKind kind,
                   ExpVariant variant) {
  const std::string sname(scheme);
  if (scheme == "imr") {
    auto prob = as<problems::AutonomousProblem>(setup);
    if (!prob) mismatch(scheme, setup, "needs an autonomous problem");
    return Method(
        sname, 2, setup.problem,
        [prob](double, double tau, const ComplexVector& u) {
          return integrators::step_implicit_midpoint(*prob, tau, u);
        },
        [prob, kind](double, double tau, const ComplexVector& u) {
          return defect::imr_defect(*prob, tau, u, kind);
        });
  }
  if (scheme == "strang" || scheme == "emb43aks") {
    auto prob = as<problems::SplitNonlinearProblem>(setup);
    if (!prob) mismatch(scheme, setup, "needs a split problem");
    const integrators::SplittingScheme tableau =
        scheme == "strang" ? integrators::strang() : integrators::emb43_ak_s();
    Method::StepFn step = [prob, tableau](double, double tau, const ComplexVector& u) {
      return integrators::step_splitting(tableau, *prob, tau, u);
    };
    Method::DefectFn dfn;
    if (scheme == "strang") {
      dfn = [prob, kind](double, double tau, const ComplexVector& u) {
        return defect::strang_defect(*prob, tau, u, kind);
      };
    } else {
      if (kind == DefectKind::classical) mismatch(scheme, setup, "has no classical defect");
      if (auto semi = std::dynamic_pointer_cast<const problems::SemilinearProblem>(prob)) {
        dfn = [semi, tableau](double, double tau, const ComplexVector& u) {
          return defect::splitting_defect_semilinear(tableau, *semi, tau, u);
        };
      } else {
        dfn = [prob, tableau](double, double tau, const ComplexVector& u) {
          return defect::splitting_defect_nonlinear(tableau, *prob, tau, u);
        };
      }
    }
    return Method(sname, tableau.order, setup.problem, std::move(step), std::move(dfn));
  }
  if (scheme == "expmid" || scheme == "cf4" || scheme == "magnus4") {
    auto prob = as<problems::NonautonomousLinearProblem>(setup);
    if (!prob) mismatch(scheme, setup, "needs a nonautonomous linear problem");
    if (kind == DefectKind::classical) mismatch(scheme, setup, "has no classical defect");
    if (scheme == "expmid") {
      return Method(
          sname, 2, setup.problem,
          [prob](double t0, double tau, const ComplexVector& u) {
            return integrators::step_exp_midpoint(*prob, t0, tau, u);
          },
          [prob](double t0, double tau, const ComplexVector& u) {
            return defect::expmid_defect_symmetrized(*prob, t0, tau, u);
          });
    }
    if (scheme == "cf4") {
      const integrators::CfmScheme tableau = integrators::cf4();
      return Method(
          sname, tableau.order, setup.problem,
          [prob, tableau](double t0, double tau, const ComplexVector& u) {
            return integrators::step_cfm(tableau, *prob, t0, tau, u);
          },
          [prob, tableau, variant](double t0, double tau, const ComplexVector& u) {
            return defect::cfm_defect(tableau, *prob, t0, tau, u, variant);
          });
    }
    return Method(
        sname, 4, setup.problem,
        [prob](double t0, double tau, const ComplexVector& u) {
          return integrators::step_magnus4(*prob, t0, tau, u);
        },
        [prob, variant](double t0, double tau, const ComplexVector& u) {
          return defect::magnus4_defect(*prob, t0, tau, u, variant);
        });
  }
  throw std::invalid_argument("unknown scheme '" + sname + "'");
}

}  // namespace symdefect::control
