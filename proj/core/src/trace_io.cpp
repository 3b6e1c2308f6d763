#include "feedermads/trace_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "feedermads/errors.hpp"

namespace feedermads {
namespace {

constexpr char kTraceHeader[] =
    "eval,candidate_bits,f_kw,h,decision,incumbent_id,filter_size";

std::string render_raw_point(const std::vector<int>& point) {
  std::string s;
  s.reserve(point.size());
  for (int v : point) s += std::to_string(v);
  return s;
}

void write_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << text;
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_trace_csv(const std::vector<TraceRecord>& trace,
                             const std::vector<SkipRecord>& skips) {
  std::string out(kTraceHeader);
  out.push_back('\n');

  std::size_t t = 0;
  std::size_t s = 0;
  while (t < trace.size() || s < skips.size()) {
    const bool take_skip =
        s < skips.size() &&
        (t >= trace.size() || skips[s].seq < trace[t].eval_index);
    if (take_skip) {
      const SkipRecord& r = skips[s++];
      out += std::to_string(r.seq);
      out.push_back(',');
      out += render_raw_point(r.point);
      out += ",,,skipped_invalid,";
      out += std::to_string(r.incumbent_id);
      out.push_back(',');
      out += std::to_string(r.filter_size);
      out.push_back('\n');
    } else {
      const TraceRecord& r = trace[t++];
      out += std::to_string(r.eval_index);
      out.push_back(',');
      out += to_bits(r.candidate);
      out.push_back(',');
      out += format_double(r.metrics.loss_kw);
      out.push_back(',');
      out += format_double(r.metrics.violation);
      out.push_back(',');
      out += to_string(r.decision.kind);
      out.push_back(',');
      out += std::to_string(r.incumbent_id);
      out.push_back(',');
      out += std::to_string(r.filter_size_after);
      out.push_back('\n');
    }
  }
  return out;
}

std::string format_frontier_json(const FrontierFilter& frontier) {
  std::vector<FrontierEntry> sorted(frontier.entries());
  std::sort(sorted.begin(), sorted.end(),
            [](const FrontierEntry& a, const FrontierEntry& b) {
              return a.m.loss_kw < b.m.loss_kw;
            });

  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["entries"] = nlohmann::ordered_json::array();
  for (const FrontierEntry& e : sorted) {
    nlohmann::ordered_json entry;
    entry["bits"] = to_bits(e.x);
    if (e.m.is_infeasible()) {
      entry["f_kw"] = "inf";
    } else {
      entry["f_kw"] = e.m.loss_kw;
    }
    entry["h"] = e.m.violation;
    j["entries"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

void write_trace_csv(const std::vector<TraceRecord>& trace,
                     const std::vector<SkipRecord>& skips,
                     const std::string& path) {
  write_file(format_trace_csv(trace, skips), path);
}

void write_frontier_json(const FrontierFilter& frontier,
                         const std::string& path) {
  write_file(format_frontier_json(frontier), path);
}

}  // namespace feedermads
