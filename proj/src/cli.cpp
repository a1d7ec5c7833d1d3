#include "visicone/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "visicone/io.hpp"
#include "visicone/projection.hpp"
#include "visicone/suites.hpp"
#include "visicone/visibility.hpp"

namespace visicone {

namespace {

std::string json_point(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

std::string json_doubles(const std::vector<double>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += format_double(vs[i]);
  }
  return out + "]";
}

std::string json_indices(const std::vector<std::size_t>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

template <class Q>
const Q& expect_query(const Problem& problem, const char* tag) {
  const Q* q = std::get_if<Q>(&problem.query);
  if (!q) {
    throw MalformedInput(std::string("query: expected a '") + tag +
                         "' query for this subcommand");
  }
  return *q;
}

int cmd_project(const Problem& problem, std::ostream& out) {
  const ProjectQuery& q = expect_query<ProjectQuery>(problem, "project");
  ProjectionResult r = std::visit(
      [&](const auto& body) -> ProjectionResult {
        using B = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<B, Segment>) {
          return project_segment(body, q.point);
        } else if constexpr (std::is_same_v<B, Simplex>) {
          return project_simplex(body, q.point);
        } else if constexpr (std::is_same_v<B, Polytope>) {
          return project_polytope(body, q.point);
        } else if constexpr (std::is_same_v<B, AffineFlat>) {
          return project_affine(body, q.point);
        } else {
          throw MalformedInput(
              "body.type: project is not supported for disk_cone");
        }
      },
      problem.body);
  out << "{\"point\": " << json_point(r.point)
      << ", \"distance\": " << format_double(r.distance)
      << ", \"weights\": " << json_doubles(r.weights)
      << ", \"facet_chain\": " << json_indices(r.facet_chain) << "}\n";
  return 0;
}

int cmd_visible(const Problem& problem, const VisibilityParams& params,
                std::ostream& out) {
  const VisibleQuery& q = expect_query<VisibleQuery>(problem, "visible");
  VisibilityCertificate cert =
      is_visible(problem.body, q.from, q.candidate, params);
  out << "{\"visible\": " << (cert.visible ? "true" : "false")
      << ", \"lambda_star\": " << format_double(cert.lambda_star)
      << ", \"blocker\": "
      << (cert.blocker ? json_point(*cert.blocker) : std::string("null"))
      << ", \"method\": "
      << (cert.method == VisibilityMethod::kLambdaScan ? "\"lambda-scan\""
                                                       : "\"cone-test\"")
      << "}\n";
  return 0;
}

int cmd_raycast(const Problem& problem, const VisibilityParams& params,
                std::ostream& out) {
  const RaycastQuery& q = expect_query<RaycastQuery>(problem, "raycast");
  RaycastResult hit = raycast_hit(problem.body, q.from, q.toward, params);
  out << "{\"point\": " << json_point(hit.point)
      << ", \"lambda0\": " << format_double(hit.lambda0) << "}\n";
  return 0;
}

int cmd_sample(const Problem& problem, const VisibilityParams& params,
               std::uint64_t default_seed, const std::string& output_path,
               std::ostream& out) {
  const SampleQuery& q = expect_query<SampleQuery>(problem, "sample");
  const std::uint64_t seed = q.seed.value_or(default_seed);
  const auto samples =
      sample_visible(problem.body, q.from, q.count, seed, params);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      throw MalformedInput("output: cannot open '" + output_path + "'");
    }
    sink = &file;
  }

  *sink << "index";
  for (std::size_t c = 0; c < problem.dim; ++c) *sink << ",coord_" << c;
  *sink << ",lambda_star\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    VisibilityCertificate cert =
        is_visible(problem.body, q.from, samples[i], params);
    *sink << i;
    for (std::size_t c = 0; c < problem.dim; ++c) {
      *sink << "," << format_double(samples[i][c]);
    }
    *sink << "," << format_double(cert.lambda_star) << "\n";
  }
  return 0;
}

int cmd_separate(const Problem& problem, std::ostream& out) {
  const SeparateQuery& q = expect_query<SeparateQuery>(problem, "separate");
  const Polytope* p = std::get_if<Polytope>(&problem.body);
  if (!p) {
    throw MalformedInput("body.type: separate requires a polytope body");
  }
  SeparationCertificate cert = separate_segment(*p, q.x, q.y);
  out << "{\"normal\": " << json_point(cert.normal)
      << ", \"offset\": " << format_double(cert.offset)
      << ", \"gap\": " << format_double(cert.gap) << "}\n";
  return 0;
}

int cmd_check_example24(std::ostream& out) {
  bool all_pass = true;
  const Body cone = DiskCone{};
  const Vector origin = Vector::zero(3);

  long blocked = 0;
  for (int k = 1; k <= 100; ++k) {
    const double t = static_cast<double>(k) * std::numbers::pi / 101.0;
    const Vector v{2.0, std::sin(t), 1.0 + std::cos(t)};
    if (!is_visible(cone, origin, v).visible) ++blocked;
  }
  const bool grid_ok = blocked == 0;
  out << (grid_ok ? "PASS" : "FAIL") << " arc-grid-visible (100 points, "
      << blocked << " blocked)\n";
  all_pass = all_pass && grid_ok;

  VisibilityCertificate limit = is_visible(cone, origin, Vector{2.0, 0.0, 0.0});
  const bool limit_ok =
      !limit.visible && std::abs(limit.lambda_star - 0.5) <= 1e-6;
  out << (limit_ok ? "PASS" : "FAIL")
      << " limit-direction-blocked (lambda* = "
      << format_double(limit.lambda_star) << ")\n";
  all_pass = all_pass && limit_ok;

  const bool member_ok = contains(cone, Vector{1.5, 0.0, 0.0}, 1e-9);
  out << (member_ok ? "PASS" : "FAIL") << " axis-point-membership\n";
  all_pass = all_pass && member_ok;

  return all_pass ? 0 : 3;
}

int cmd_verify(int instances, std::uint64_t seed, std::ostream& out) {
  const auto results = run_property_suites({instances, seed});
  bool all_pass = true;
  for (const SuiteResult& r : results) {
    if (r.pass) {
      out << "PASS " << r.name << " (" << r.checked << " checks)\n";
    } else {
      out << "FAIL " << r.name << " (" << r.failed << "/" << r.checked
          << " failed): " << r.detail << "\n";
      all_pass = false;
    }
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"visicone: batch convex-geometry solver"};
  app.fallthrough();
  app.require_subcommand(1);

  double tol = 1e-9;
  double vis_tol = 1e-7;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol, "membership tolerance (default 1e-9)");
  app.add_option("--vis-tol", vis_tol,
                 "visibility threshold on lambda* (default 1e-7)");
  app.add_option("--seed", seed, "random seed (default 0)");

  std::string input;
  std::string output;
  int instances = 100;

  CLI::App* project = app.add_subcommand("project", "nearest-point query");
  project->add_option("--input", input, "problem file")->required();
  CLI::App* visible = app.add_subcommand("visible", "visibility certificate");
  visible->add_option("--input", input, "problem file")->required();
  CLI::App* raycast = app.add_subcommand("raycast", "first visible hit");
  raycast->add_option("--input", input, "problem file")->required();
  CLI::App* sample = app.add_subcommand("sample", "visible point sample CSV");
  sample->add_option("--input", input, "problem file")->required();
  sample->add_option("--output", output, "CSV destination (default stdout)");
  CLI::App* separate =
      app.add_subcommand("separate", "segment separation certificate");
  separate->add_option("--input", input, "problem file")->required();
  CLI::App* check24 =
      app.add_subcommand("check-example24", "disk-cone witness self-check");
  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--instances", instances,
                     "instances per suite (default 100)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  VisibilityParams params;
  params.pre_tol = tol;
  params.vis_tol = vis_tol;

  try {
    if (*check24) return cmd_check_example24(out);
    if (*verify) return cmd_verify(instances, seed, out);

    const Problem problem = load_problem(input);
    if (*project) return cmd_project(problem, out);
    if (*visible) return cmd_visible(problem, params, out);
    if (*raycast) return cmd_raycast(problem, params, out);
    if (*sample) return cmd_sample(problem, params, seed, output, out);
    if (*separate) return cmd_separate(problem, out);
    err << "error: no subcommand selected\n";
    return 1;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotInBody& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedBody& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace visicone
