/**
 * @file trace_io.hpp
 * @brief Byte-deterministic emission of run traces and frontiers.
 *
 * Trace CSV, header `eval,candidate_bits,f_kw,h,decision,incumbent_id,
 * filter_size`. Evaluation rows carry the candidate as a 0/1 string, both
 * metrics (f_kw is `inf` for the infeasible sentinel), and the filter's
 * decision word. Discarded out-of-domain poll points appear as
 * `skipped_invalid` rows interleaved at their sequence position: the raw
 * integer point is rendered with signed digits (e.g. `-110` for (-1,1,0))
 * and the metric columns are left empty, since nothing was evaluated.
 *
 * Frontier JSON: {"schema_version": 1, "entries": [{"bits", "f_kw", "h"}]}
 * with entries sorted by f ascending and the sentinel written as "inf".
 *
 * All floating-point text is shortest-round-trip, so identical runs emit
 * identical bytes.
 */

#ifndef FEEDERMADS_TRACE_IO_HPP
#define FEEDERMADS_TRACE_IO_HPP

#include <string>
#include <vector>

#include "feedermads/frontier_filter.hpp"
#include "feedermads/optimizer.hpp"

namespace feedermads {

/// Shortest-round-trip decimal rendering; infinities render as `inf`/`-inf`.
std::string format_double(double value);

/// Renders the merged trace (evaluations plus skips, by sequence number).
std::string format_trace_csv(const std::vector<TraceRecord>& trace,
                             const std::vector<SkipRecord>& skips);

/// Renders the frontier sorted by f ascending.
std::string format_frontier_json(const FrontierFilter& frontier);

/// Writes format_trace_csv output to a file; throws IoError on failure.
void write_trace_csv(const std::vector<TraceRecord>& trace,
                     const std::vector<SkipRecord>& skips,
                     const std::string& path);

/// Writes format_frontier_json output to a file; throws IoError on failure.
void write_frontier_json(const FrontierFilter& frontier,
                         const std::string& path);

}  // namespace feedermads

#endif  // FEEDERMADS_TRACE_IO_HPP
