// curvature_map — rasterize the Gauss curvature of a surface over its
// parameter domain and emit a PPM heat map on stdout (blue: K < 0, white:
// K ≈ 0, red: K > 0).
//
//   ./demo_curvature_map torus 400 200 > torus_K.ppm
//
// Arguments (all optional): catalog name or inline description, width, height.
#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "geo3/geo3.hpp"

int main(int argc, char** argv) {
  const std::string source = argc > 1 ? argv[1] : "torus";
  const int width = argc > 2 ? std::stoi(argv[2]) : 360;
  const int height = argc > 3 ? std::stoi(argv[3]) : 180;

  try {
    geo3::SurfaceModel surface = [&] {
      if (source.find('(') != std::string::npos) return geo3::parse_surface(source);
      const auto entries = geo3::catalog::default_entries();
      const auto* e = geo3::catalog::find_entry(entries, source);
      if (e == nullptr || !e->surface)
        throw geo3::GeomError("'" + source + "' is not a catalog surface");
      return *e->surface;
    }();

    std::vector<double> K(static_cast<std::size_t>(width) * height);
    double scale = 0.0;
    for (int j = 0; j < height; ++j)
      for (int i = 0; i < width; ++i) {
        const double u = surface.u0 + (surface.u1 - surface.u0) * (i + 0.5) / width;
        const double v = surface.v0 + (surface.v1 - surface.v0) * (j + 0.5) / height;
        const double k = geo3::shape_and_curvatures(surface, u, v).K;
        K[static_cast<std::size_t>(j) * width + i] = k;
        scale = std::max(scale, std::fabs(k));
      }
    if (scale == 0.0) scale = 1.0;  // flat surface: all white

    std::cout << "P3\n" << width << " " << height << "\n255\n";
    for (double k : K) {
      const double x = std::clamp(k / scale, -1.0, 1.0);
      // diverging palette: x = −1 → blue, 0 → white, +1 → red
      const int r = static_cast<int>(255 * (x >= 0.0 ? 1.0 : 1.0 + x));
      const int g = static_cast<int>(255 * (1.0 - std::fabs(x)));
      const int b = static_cast<int>(255 * (x <= 0.0 ? 1.0 : 1.0 - x));
      std::cout << r << " " << g << " " << b << "\n";
    }
    std::cerr << "curvature_map: " << surface.label << ", |K| scaled by " << scale << "\n";
    return 0;
  } catch (const geo3::Error& e) {
    std::cerr << "curvature_map: " << e.what() << "\n";
    return 1;
  }
}
