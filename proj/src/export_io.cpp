#include "jamsim/export_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jamsim {
namespace {

constexpr char kMagic[4] = {'R', 'D', 'M', '0'};

double cell_db(cd y) { return 20.0 * std::log10(std::max(std::abs(y), 1e-30)); }

void put_u32_le(std::string& buf, uint32_t v) {
  buf.push_back(static_cast<char>(v & 0xff));
  buf.push_back(static_cast<char>((v >> 8) & 0xff));
  buf.push_back(static_cast<char>((v >> 16) & 0xff));
  buf.push_back(static_cast<char>((v >> 24) & 0xff));
}

uint32_t get_u32_le(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot write file: " + path);
  return out;
}

std::string detections_name(int snapshot) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "detections_%04d.csv", snapshot);
  return buf;
}

std::string rdm_name(int snapshot) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "rdm_%04d.f32", snapshot);
  return buf;
}

}  // namespace

void write_rdm_f32le(const Rdm& rdm, const std::string& path) {
  const int rows = rdm.num_range_gates();
  const int cols = rdm.num_doppler_gates();
  std::string buf;
  buf.reserve(16 + static_cast<size_t>(rows) * cols * 4);
  buf.append(kMagic, 4);
  put_u32_le(buf, static_cast<uint32_t>(rows));
  put_u32_le(buf, static_cast<uint32_t>(cols));
  put_u32_le(buf, 0);
  for (int l = 0; l < rows; ++l)
    for (int v = 0; v < cols; ++v)
      put_u32_le(buf, std::bit_cast<uint32_t>(static_cast<float>(cell_db(rdm.grid.at(l, v)))));
  auto out = open_out(path, std::ios::binary);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("short write: " + path);
}

Rdm read_rdm_f32le(const std::string& path, const OfdmConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rdm file: " + path);
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char*>(header), 16))
    throw IoError("truncated rdm header: " + path);
  if (std::memcmp(header, kMagic, 4) != 0)
    throw IoError("bad rdm magic: " + path);
  const uint32_t rows = get_u32_le(header + 4);
  const uint32_t cols = get_u32_le(header + 8);
  if (rows == 0 || cols == 0 || rows > (1u << 20) || cols > (1u << 20))
    throw IoError("implausible rdm dimensions: " + path);

  Rdm rdm;
  rdm.grid = Grid<cd>(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<unsigned char> body(static_cast<size_t>(rows) * cols * 4);
  if (!in.read(reinterpret_cast<char*>(body.data()),
               static_cast<std::streamsize>(body.size())))
    throw IoError("truncated rdm body: " + path);
  for (uint32_t l = 0; l < rows; ++l)
    for (uint32_t v = 0; v < cols; ++v) {
      const float db = std::bit_cast<float>(get_u32_le(&body[(static_cast<size_t>(l) * cols + v) * 4]));
      rdm.grid.at(static_cast<int>(l), static_cast<int>(v)) =
          cd{std::pow(10.0, static_cast<double>(db) / 20.0), 0.0};
    }
  const auto axes = rdm_axes(cfg);
  rdm.range_per_gate_m = axes.first;
  rdm.speed_per_gate_mps = axes.second;
  return rdm;
}

void write_rdm_csv(const Rdm& rdm, const std::string& path) {
  const int rows = rdm.num_range_gates();
  const int cols = rdm.num_doppler_gates();
  auto out = open_out(path, std::ios::out);
  char num[32];
  for (int l = 0; l < rows; ++l) {
    std::string line;
    for (int sv = -cols / 2; sv < cols / 2; ++sv) {
      const int v = rdm.natural_doppler(sv);
      std::snprintf(num, sizeof(num), "%.6f", cell_db(rdm.grid.at(l, v)));
      if (!line.empty()) line.push_back(',');
      line += num;
    }
    out << line << '\n';
  }
  if (!out) throw IoError("short write: " + path);
}

void write_rdm_pgm(const Rdm& rdm, const std::string& path, double dynamic_range_db) {
  if (dynamic_range_db <= 0.0) throw IoError("dynamic range must be positive");
  const int rows = rdm.num_range_gates();
  const int cols = rdm.num_doppler_gates();
  double peak = -1e300;
  for (int l = 0; l < rows; ++l)
    for (int v = 0; v < cols; ++v) peak = std::max(peak, cell_db(rdm.grid.at(l, v)));
  const double floor_db = peak - dynamic_range_db;

  std::string body;
  body.reserve(static_cast<size_t>(rows) * cols);
  for (int l = 0; l < rows; ++l)
    for (int sv = -cols / 2; sv < cols / 2; ++sv) {
      const double db = cell_db(rdm.grid.at(l, rdm.natural_doppler(sv)));
      const long px = std::lround(255.0 * (db - floor_db) / dynamic_range_db);
      body.push_back(static_cast<char>(std::clamp(px, 0L, 255L)));
    }

  auto out = open_out(path, std::ios::binary);
  out << "P5\n" << cols << ' ' << rows << "\n255\n";
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) throw IoError("short write: " + path);
}

void write_detections_csv(const std::vector<Detection>& detections, int snapshot,
                          const std::string& path) {
  auto out = open_out(path, std::ios::out);
  out << "snapshot,range_gate,doppler_gate,power,threshold,range_m,speed_mps\n";
  char line[256];
  for (const auto& d : detections) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%.9e,%.9e,%.6f,%.6f\n", snapshot,
                  d.range_gate, d.doppler_gate, d.power, d.threshold, d.range_m,
                  d.speed_mps);
    out << line;
  }
  if (!out) throw IoError("short write: " + path);
}

std::vector<Detection> read_detections_csv(const std::string& path, int* snapshot_out) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open detections file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("snapshot,", 0) != 0)
    throw IoError("bad detections header: " + path);
  std::vector<Detection> dets;
  int snapshot = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Detection d;
    int snap = 0;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lf,%lf,%lf,%lf", &snap, &d.range_gate,
                    &d.doppler_gate, &d.power, &d.threshold, &d.range_m,
                    &d.speed_mps) != 7)
      throw IoError("bad detections row in " + path + ": " + line);
    if (snapshot < 0) snapshot = snap;
    dets.push_back(d);
  }
  if (snapshot_out) *snapshot_out = snapshot;
  return dets;
}

void write_tracks_csv(const std::vector<Track>& tracks, const std::string& path) {
  auto out = open_out(path, std::ios::out);
  out << "track_id,status,snapshot,range_gate,doppler_gate,range_rate,doppler_rate\n";
  char line[256];
  for (const auto& t : tracks) {
    const char* status = t.status == TrackStatus::Confirmed   ? "confirmed"
                         : t.status == TrackStatus::Tentative ? "tentative"
                                                              : "dead";
    const double rr = track_range_rate_lsq(t);
    const double dr = track_doppler_rate_lsq(t);
    for (const auto& p : t.points) {
      std::snprintf(line, sizeof(line), "%d,%s,%d,%.3f,%.3f,%.6f,%.6f\n", t.id, status,
                    p.snapshot, p.range_gate, p.doppler_gate, rr, dr);
      out << line;
    }
  }
  if (!out) throw IoError("short write: " + path);
}

void write_sweep_csv(const std::vector<SweepRow>& rows, SweepParam param,
                     const std::string& path) {
  auto out = open_out(path, std::ios::out);
  out << "param,value,captured_by,true_row_p2e_db,jam_row_p2e_db,phantom_detected,"
         "jam_los_detected,phantom_track_confirmed,true_target_gate,true_target_shift,"
         "detection_count\n";
  const std::string name = sweep_param_name(param);
  char line[384];
  for (const auto& r : rows) {
    std::string gate = r.true_target_gate ? std::to_string(*r.true_target_gate) : "";
    std::string shift = r.true_target_shift ? std::to_string(*r.true_target_shift) : "";
    std::snprintf(line, sizeof(line), "%s,%.9g,%s,%.3f,%.3f,%d,%d,%d,%s,%s,%d\n",
                  name.c_str(), r.value,
                  r.captured == CapturedBy::Jammer ? "jammer" : "stx",
                  r.true_row_p2e_db, r.jam_row_p2e_db, r.phantom_detected ? 1 : 0,
                  r.jam_los_detected ? 1 : 0, r.phantom_track_confirmed ? 1 : 0,
                  gate.c_str(), shift.c_str(), r.detection_count);
    out << line;
  }
  if (!out) throw IoError("short write: " + path);
}

void write_campaign_outputs(const ScenarioConfig& sc, const CampaignResult& result,
                            const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + out_dir);
  const std::filesystem::path dir(out_dir);

  nlohmann::json summary = nlohmann::json::parse(scenario_summary_json(sc));
  nlohmann::json snaps = nlohmann::json::array();
  for (const auto& snap : result.snapshots) {
    write_rdm_f32le(snap.rdm, (dir / rdm_name(snap.snapshot)).string());
    write_detections_csv(snap.detections, snap.snapshot,
                         (dir / detections_name(snap.snapshot)).string());
    snaps.push_back({{"snapshot", snap.snapshot},
                     {"captured_by", snap.captured == CapturedBy::Jammer ? "jammer" : "stx"},
                     {"corr_lag", snap.corr_lag},
                     {"delta_tau_s", snap.delta_tau_s},
                     {"detections", snap.detections.size()}});
  }
  write_tracks_csv(result.tracks, (dir / "tracks.csv").string());

  int confirmed = 0;
  for (const auto& t : result.tracks)
    if (t.status == TrackStatus::Confirmed) ++confirmed;
  summary["snapshots_run"] = snaps;
  summary["tracks_total"] = result.tracks.size();
  summary["tracks_confirmed"] = confirmed;
  auto out = open_out((dir / "summary.json").string(), std::ios::out);
  out << summary.dump(2) << '\n';
  if (!out) throw IoError("short write: summary.json");
}

}  // namespace jamsim
