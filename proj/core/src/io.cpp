#include "ultrawave/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uw {

namespace {

constexpr char kMagic[] = "UWSIG1\n";
constexpr std::size_t kMagicLen = 7;

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

}  // namespace

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << text;
  }
  std::filesystem::rename(tmp, path);
}

void write_signal(const SampledSignal& f, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os.write(kMagic, kMagicLen);
    put<std::int64_t>(os, f.grid.dimension);
    put<std::int64_t>(os, f.grid.extent[0]);
    put<std::int64_t>(os, f.grid.extent[1]);
    put<double>(os, f.grid.origin[0]);
    put<double>(os, f.grid.origin[1]);
    put<double>(os, f.grid.spacing[0]);
    put<double>(os, f.grid.spacing[1]);
    for (const cplx& v : f.values) {
      put<double>(os, v.real());
      put<double>(os, v.imag());
    }
  }
  std::filesystem::rename(tmp, path);

  json sidecar;
  sidecar["name"] = f.name;
  sidecar["grid"] = grid_to_json(f.grid);
  sidecar["samples"] = f.values.size();
  atomic_write_text(path.string() + ".json", sidecar.dump(2) + "\n");
}

SampledSignal read_signal(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path.string());
  char magic[kMagicLen];
  is.read(magic, kMagicLen);
  if (!is || std::string(magic, kMagicLen) != kMagic)
    throw std::runtime_error(path.string() + ": not a signal container");
  SampledSignal f;
  f.grid.dimension = static_cast<int>(get<std::int64_t>(is));
  f.grid.extent[0] = static_cast<int>(get<std::int64_t>(is));
  f.grid.extent[1] = static_cast<int>(get<std::int64_t>(is));
  f.grid.origin[0] = get<double>(is);
  f.grid.origin[1] = get<double>(is);
  f.grid.spacing[0] = get<double>(is);
  f.grid.spacing[1] = get<double>(is);
  if (f.grid.dimension < 1 || f.grid.dimension > 2 || f.grid.extent[0] < 1)
    throw std::runtime_error(path.string() + ": corrupt header");
  f.values.resize(f.grid.size());
  for (cplx& v : f.values) {
    const double re = get<double>(is);
    const double im = get<double>(is);
    v = {re, im};
  }
  if (!is) throw std::runtime_error(path.string() + ": truncated payload");

  const std::filesystem::path sidecar = path.string() + ".json";
  if (std::filesystem::exists(sidecar)) {
    std::ifstream sc(sidecar);
    json j = json::parse(sc, nullptr, false);
    if (!j.is_discarded() && j.contains("name")) f.name = j["name"].get<std::string>();
  }
  return f;
}

void write_signal_csv(const SampledSignal& f, const std::filesystem::path& path) {
  std::ostringstream os;
  os.precision(17);
  const GridSpec& g = f.grid;
  if (g.dimension == 1) {
    os << "x,re,im\n";
    for (int i = 0; i < g.extent[0]; ++i)
      os << g.coord(0, i) << ',' << f.at(i).real() << ',' << f.at(i).imag() << '\n';
  } else {
    os << "x,y,re,im\n";
    for (int i = 0; i < g.extent[0]; ++i)
      for (int j = 0; j < g.extent[1]; ++j)
        os << g.coord(0, i) << ',' << g.coord(1, j) << ',' << f.at(i, j).real() << ','
           << f.at(i, j).imag() << '\n';
  }
  atomic_write_text(path, os.str());
}

json sequence_to_json(const DefiningSequence& seq) {
  json j;
  switch (seq.kind) {
    case DefiningSequence::Kind::Gevrey:
      j["kind"] = "gevrey";
      j["s"] = seq.gevrey_s;
      j["p_max"] = seq.p_max();
      break;
    case DefiningSequence::Kind::Product:
      j["kind"] = "product";
      j["factors"] = seq.factors;
      break;
    case DefiningSequence::Kind::Custom:
      j["kind"] = "custom";
      j["log_values"] = seq.log_values;
      break;
  }
  return j;
}

DefiningSequence sequence_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "gevrey")
    return gevrey_sequence(j.at("s").get<double>(), j.value("p_max", 512));
  if (kind == "product")
    return product_sequence(j.at("factors").get<std::vector<double>>());
  if (kind == "custom") {
    if (j.contains("log_values")) {
      DefiningSequence seq = custom_sequence({1.0, 1.0, 1.0});
      seq.log_values = j.at("log_values").get<std::vector<double>>();
      return seq;
    }
    return custom_sequence(j.at("values").get<std::vector<double>>());
  }
  throw std::invalid_argument("sequence_from_json: unknown kind '" + kind + "'");
}

json weight_to_json(const Weight& w) {
  json j;
  j["dimension"] = w.dimension;
  switch (w.kind) {
    case Weight::Kind::Polynomial:
      j["kind"] = "polynomial";
      j["t"] = w.poly_t;
      break;
    case Weight::Kind::ExpPower:
      j["kind"] = "exp_power";
      j["k"] = w.exp_k;
      j["b"] = w.exp_b;
      break;
    case Weight::Kind::Assoc:
      j["kind"] = "assoc";
      j["seq"] = sequence_to_json(w.af->sequence());
      j["N"] = w.assoc_N;
      break;
    case Weight::Kind::Composite:
      j["kind"] = "composite";
      j["s"] = w.comp_s;
      j["b"] = w.comp_b;
      j["a"] = w.comp_a;
      j["r"] = w.comp_r;
      break;
    case Weight::Kind::Custom:
      throw std::invalid_argument("weight_to_json: custom weights are not serializable");
  }
  return j;
}

Weight weight_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int dim = j.value("dimension", 1);
  if (kind == "polynomial") return Weight::polynomial(j.at("t").get<double>(), dim);
  if (kind == "exp_power")
    return Weight::exp_power(j.at("k").get<double>(), j.at("b").get<double>(), dim);
  if (kind == "assoc")
    return assoc_weight(sequence_from_json(j.at("seq")), j.at("N").get<double>(), dim);
  if (kind == "composite")
    return Weight::composite(j.at("s").get<double>(), j.at("b").get<double>(),
                             j.at("a").get<double>(), j.at("r").get<double>(), dim);
  throw std::invalid_argument("weight_from_json: unknown kind '" + kind + "'");
}

json cone_to_json(const Cone& c) {
  json j;
  j["axis"] = c.dimension == 1 ? json::array({c.axis[0]})
                               : json::array({c.axis[0], c.axis[1]});
  j["half_angle"] = c.half_angle;
  return j;
}

json window_to_json(const WindowSpec& w) {
  json j;
  j["kind"] = w.kind == WindowSpec::Kind::Gaussian ? "gaussian" : "gevrey_bump";
  j["s"] = w.s;
  j["radius"] = w.radius;
  return j;
}

WindowSpec window_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "gaussian") return WindowSpec::gaussian(j.at("radius").get<double>());
  if (kind == "gevrey_bump")
    return WindowSpec::gevrey_bump(j.value("s", 2.0), j.at("radius").get<double>());
  throw std::invalid_argument("window_from_json: unknown kind '" + kind + "'");
}

json grid_to_json(const GridSpec& g) {
  json j;
  j["dimension"] = g.dimension;
  j["origin"] = g.dimension == 1 ? json::array({g.origin[0]})
                                 : json::array({g.origin[0], g.origin[1]});
  j["spacing"] = g.dimension == 1 ? json::array({g.spacing[0]})
                                  : json::array({g.spacing[0], g.spacing[1]});
  j["extent"] = g.dimension == 1 ? json::array({g.extent[0]})
                                 : json::array({g.extent[0], g.extent[1]});
  return j;
}

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  g.dimension = j.at("dimension").get<int>();
  const auto& o = j.at("origin");
  const auto& s = j.at("spacing");
  const auto& e = j.at("extent");
  g.origin[0] = o[0].get<double>();
  g.spacing[0] = s[0].get<double>();
  g.extent[0] = e[0].get<int>();
  if (g.dimension == 2) {
    g.origin[1] = o[1].get<double>();
    g.spacing[1] = s[1].get<double>();
    g.extent[1] = e[1].get<int>();
  }
  return g;
}

json report_to_json(const WaveFrontReport& rep) {
  json j;
  j["kind"] = to_string(rep.kind);
  j["grid"] = grid_to_json(rep.grid);
  json params;
  params["q"] = rep.config.q;
  params["p"] = rep.config.p;
  params["tau_star"] = rep.config.tau_star;
  params["window"] = window_to_json(rep.config.window);
  params["position_stride"] = rep.config.position_stride;
  params["n_dir"] = rep.config.n_dir;
  params["overlap"] = rep.config.overlap;
  params["annulus"] = rep.config.annulus;
  params["crop_extent"] = rep.config.crop_extent;
  if (rep.weight_N != 0.0) params["weight_N"] = rep.weight_N;
  if (rep.gevrey_s != 0.0) params["gevrey_s"] = rep.gevrey_s;
  if (!rep.family.empty()) params["family"] = rep.family;
  j["parameters"] = params;

  j["cones"] = json::array();
  for (const Cone& c : rep.dir_cover.cones) j["cones"].push_back(cone_to_json(c));
  j["positions"] = json::array();
  for (const auto& p : rep.positions) {
    if (rep.grid.dimension == 1)
      j["positions"].push_back(rep.grid.coord(0, p[0]));
    else
      j["positions"].push_back({rep.grid.coord(0, p[0]), rep.grid.coord(1, p[1])});
  }
  j["n_fit_failures"] = rep.n_fit_failures;
  j["n_smoothed"] = rep.n_smoothed;

  j["cells"] = json::array();
  for (std::size_t pi = 0; pi < rep.positions.size(); ++pi)
    for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
      const WfCell& c = rep.cell(pi, di);
      json cj;
      cj["position"] = pi;
      cj["direction"] = di;
      cj["singular"] = c.singular;
      cj["fit_ok"] = c.fit_ok;
      cj["tau"] = c.tau;
      cj["r2"] = c.r2;
      cj["n_points"] = c.n_points;
      cj["seminorms"] = c.seminorms;
      if (rep.kind == EstimatorKind::GEVREY) {
        cj["h"] = std::isfinite(c.h) ? json(c.h) : json("inf");
        cj["singular_beurling"] = c.singular_beurling;
        cj["singular_roumieu"] = c.singular_roumieu;
      }
      j["cells"].push_back(cj);
    }
  return j;
}

void write_report(const WaveFrontReport& rep, const std::filesystem::path& json_path,
                  const std::filesystem::path& csv_path) {
  atomic_write_text(json_path, report_to_json(rep).dump(2) + "\n");
  write_report_csv(rep, csv_path);
}

void write_report_csv(const WaveFrontReport& rep, const std::filesystem::path& csv_path) {
  std::ostringstream csv;
  csv.precision(17);
  csv << (rep.grid.dimension == 1 ? "x0,direction_angle,singular,tau\n"
                                  : "x0,y0,direction_angle,singular,tau\n");
  for (std::size_t pi = 0; pi < rep.positions.size(); ++pi)
    for (std::size_t di = 0; di < rep.n_dirs(); ++di) {
      const WfCell& c = rep.cell(pi, di);
      const Cone& cone = rep.dir_cover.cones[di];
      const double angle = rep.grid.dimension == 1 ? (cone.axis[0] > 0 ? 0.0 : 3.141592653589793)
                                                   : cone.angle();
      csv << rep.grid.coord(0, rep.positions[pi][0]) << ',';
      if (rep.grid.dimension == 2) csv << rep.grid.coord(1, rep.positions[pi][1]) << ',';
      csv << angle << ',' << (c.singular ? 1 : 0) << ',' << c.tau << '\n';
    }
  atomic_write_text(csv_path, csv.str());
}

}  // namespace uw
