#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ultrawave/wavefront.hpp"

namespace uw {

using json = nlohmann::json;

// Binary signal container: "UWSIG1\n" magic, then dimension/extent (int64),
// origin/spacing (float64), then interleaved re/im float64 payload, all
// little-endian. A .json sidecar next to the file repeats the grid and name.
void write_signal(const SampledSignal& f, const std::filesystem::path& path);
SampledSignal read_signal(const std::filesystem::path& path);

// CSV projection for small cases: coordinates, re, im.
void write_signal_csv(const SampledSignal& f, const std::filesystem::path& path);

json sequence_to_json(const DefiningSequence& seq);
DefiningSequence sequence_from_json(const json& j);

json weight_to_json(const Weight& w);   // custom weights are not serializable
Weight weight_from_json(const json& j);

json cone_to_json(const Cone& c);
json window_to_json(const WindowSpec& w);
WindowSpec window_from_json(const json& j);

json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const json& j);

json report_to_json(const WaveFrontReport& rep);
void write_report_csv(const WaveFrontReport& rep, const std::filesystem::path& csv_path);
void write_report(const WaveFrontReport& rep, const std::filesystem::path& json_path,
                  const std::filesystem::path& csv_path);

// Write-to-temp-then-rename, so readers never observe partial files.
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace uw
