// frenet_tube — sweep a circular cross-section along a curve using its Frenet
// frame and emit the tube as a Wavefront OBJ mesh on stdout.
//
//   ./demo_frenet "(cos t, sin t, t) on [0, 12.6]" 0.25 > tube.obj
//
// Arguments (all optional): curve description, tube radius, ring count.
#include <iostream>
#include <string>
#include <vector>

#include "geo3/geo3.hpp"

int main(int argc, char** argv) {
  const std::string source = argc > 1 ? argv[1] : "(cos t, sin t, t) on [0, 12.566]";
  const double radius = argc > 2 ? std::stod(argv[2]) : 0.25;
  const int rings = argc > 3 ? std::stoi(argv[3]) : 200;
  const int sides = 24;

  try {
    const geo3::CurveModel curve = geo3::parse_curve(source);
    std::cout << "# tube of radius " << radius << " around " << curve.label << "\n";

    std::vector<std::array<int, 4>> quads;
    int emitted = 0;
    for (int i = 0; i < rings; ++i) {
      const double t = curve.t0 + (curve.t1 - curve.t0) * i / (rings - 1.0);
      const auto f = geo3::curvature_torsion(curve, t);
      if (!f.frame_defined) {
        std::cerr << "frenet_tube: frame undefined at t=" << t << " (straight segment?)\n";
        return 2;
      }
      for (int k = 0; k < sides; ++k) {
        const double a = 2.0 * std::numbers::pi * k / sides;
        const geo3::Vec3 p =
            curve.point(t) + radius * (std::cos(a) * f.N + std::sin(a) * f.B);
        std::cout << "v " << p.x << " " << p.y << " " << p.z << "\n";
      }
      if (i > 0)
        for (int k = 0; k < sides; ++k) {
          const int a = (i - 1) * sides + k + 1, b = (i - 1) * sides + (k + 1) % sides + 1;
          quads.push_back({a, b, b + sides, a + sides});
        }
      ++emitted;
    }
    for (const auto& q : quads)
      std::cout << "f " << q[0] << " " << q[1] << " " << q[2] << " " << q[3] << "\n";
    std::cerr << "frenet_tube: " << emitted * sides << " vertices, " << quads.size()
              << " quads\n";
    return 0;
  } catch (const geo3::Error& e) {
    std::cerr << "frenet_tube: " << e.what() << "\n";
    return 1;
  }
}
