#include "limitset/census.hpp"
#include "limitset/classify.hpp"
#include "limitset/hermitian.hpp"
#include "limitset/io.hpp"
#include "limitset/slice.hpp"
#include "limitset/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>

using namespace limitset;

int main(int argc, char** argv) {
  CLI::App app{"limit set and discontinuity region of a real form in complex projective space"};
  app.require_subcommand(1);

  // classify
  int c_m = 2, c_n = 2;
  std::string c_point;
  double c_tol = kDefaultTol;
  CLI::App* cmd_classify = app.add_subcommand("classify", "label a single projective point");
  cmd_classify->add_option("--m", c_m, "real form dimension")->required();
  cmd_classify->add_option("--n", c_n, "ambient dimension")->required();
  cmd_classify->add_option("--point", c_point, "JSON array of n+1 [re,im] pairs")->required();
  cmd_classify->add_option("--tol", c_tol, "relative tolerance");

  // census
  CensusConfig cen;
  std::string cen_out;
  CLI::App* cmd_census = app.add_subcommand("census", "Monte Carlo component census");
  cmd_census->add_option("--m", cen.m, "real form dimension");
  cmd_census->add_option("--n", cen.n, "ambient dimension");
  cmd_census->add_option("--samples", cen.samples, "sample count");
  cmd_census->add_option("--edges", cen.edge_candidates, "edge candidate count");
  cmd_census->add_option("--steps", cen.segment_steps, "chord step count");
  cmd_census->add_option("--seed", cen.seed, "RNG seed");
  cmd_census->add_option("--tol", cen.tol, "relative tolerance");
  cmd_census->add_option("--out", cen_out, "write JSON report here");

  // slice
  SliceSpec sl;
  std::string sl_center, sl_u, sl_v, sl_format = "ppm", sl_out;
  CLI::App* cmd_slice = app.add_subcommand("slice", "rasterize a planar slice");
  cmd_slice->add_option("--m", sl.m, "real form dimension");
  cmd_slice->add_option("--n", sl.n, "ambient dimension");
  cmd_slice->add_option("--center", sl_center, "JSON point")->required();
  cmd_slice->add_option("--dir-u", sl_u, "JSON direction")->required();
  cmd_slice->add_option("--dir-v", sl_v, "JSON direction")->required();
  cmd_slice->add_option("--half-width", sl.half_width, "grid half width");
  cmd_slice->add_option("--res", sl.res, "pixels per side");
  cmd_slice->add_option("--format", sl_format, "ppm or csv");
  cmd_slice->add_option("--tol", sl.tol, "relative tolerance");
  cmd_slice->add_option("--out", sl_out, "output file")->required();

  // verify
  int v_trials = 1000;
  std::uint64_t v_seed = 1;
  double v_tol = kDefaultTol;
  std::string v_out;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the property suite");
  cmd_verify->add_option("--trials", v_trials, "trials per property");
  cmd_verify->add_option("--seed", v_seed, "RNG seed");
  cmd_verify->add_option("--tol", v_tol, "relative tolerance");
  cmd_verify->add_option("--out", v_out, "write JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_classify->parsed()) {
      const CVec z = parse_point_json(c_point);
      if (space_dim(z) != c_n) {
        std::cerr << "point has " << z.size() << " coordinates, expected n+1 = " << c_n + 1
                  << "\n";
        return 2;
      }
      const RegionLabel label = classify(z, c_m, c_tol);
      std::cout << to_string(label) << "\n";
      std::cout << "f = " << f_invariant(z) << "\n";
      std::cout << "herm = " << herm_inner(z, z).real() << "\n";
      return 0;
    }

    if (cmd_census->parsed()) {
      const CensusReport rep = run_census(cen);
      const std::string json = census_report_json(rep);
      if (!cen_out.empty()) {
        std::ofstream f(cen_out);
        f << json << "\n";
      }
      std::cout << json << "\n";
      return 0;
    }

    if (cmd_slice->parsed()) {
      sl.center = parse_point_json(sl_center);
      sl.dir_u = parse_point_json(sl_u);
      sl.dir_v = parse_point_json(sl_v);
      if (sl_format != "ppm" && sl_format != "csv") {
        std::cerr << "format must be ppm or csv\n";
        return 2;
      }
      const SliceResult r = render_slice(sl);
      if (sl_format == "ppm")
        write_slice_ppm(r, sl_out);
      else
        write_slice_csv(r, sl_out);
      std::cout << "wrote " << sl_out << " (" << r.res << "x" << r.res << ")\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      const VerifyReport rep = verify_suite(v_trials, v_seed, v_tol);
      std::cout << verify_report_text(rep);
      if (!v_out.empty()) {
        std::ofstream f(v_out);
        f << verify_report_json(rep) << "\n";
      }
      return rep.overall_pass ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
