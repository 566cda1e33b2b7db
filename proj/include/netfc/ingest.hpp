#pragma once

// Packet-capture CSV ingestion: parse, protocol filter, multi-file merge,
// and fixed-width time binning into packet counts.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netfc/csv.hpp"
#include "netfc/errors.hpp"

namespace netfc {

/// One parsed capture row. Columns 1-6 are seq, time, source, destination,
/// protocol, info; extra columns are ignored and a missing 6th column
/// leaves info empty.
struct PacketRecord {
    std::uint64_t seq = 0;
    double time = 0.0; // seconds since capture start
    std::string source;
    std::string destination;
    std::string protocol; // stored as given; comparisons are case-insensitive
    std::string info;
};

/// Packet counts per fixed-width time bin, anchored at t = 0.
struct BinnedSeries {
    double step_seconds = 30.0;
    std::vector<std::uint64_t> counts;
    double origin_seconds = 0.0; // left edge of bin 0
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

inline bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

} // namespace detail

/// Parse a Wireshark-style CSV export. A leading header row is detected by a
/// non-numeric time column and skipped. Throws malformed_row for short or
/// unparsable data rows, empty_input when no data rows remain.
inline std::vector<PacketRecord> parse_capture_csv(std::istream& in) {
    auto rows = csv::read_all(in);
    std::vector<PacketRecord> records;
    bool first = true;
    for (const auto& r : rows) {
        double t;
        if (first) {
            first = false;
            // header: time column (or the whole row) fails numeric parsing
            if (r.fields.size() < 2 || !detail::parse_double(r.fields[1], t)) continue;
        }
        if (r.fields.size() < 5) throw malformed_row(r.line_no);
        if (!detail::parse_double(r.fields[1], t) || t < 0) throw malformed_row(r.line_no);
        PacketRecord rec;
        double seq = 0;
        if (detail::parse_double(r.fields[0], seq) && seq >= 0)
            rec.seq = static_cast<std::uint64_t>(seq);
        rec.time = t;
        rec.source = r.fields[2];
        rec.destination = r.fields[3];
        rec.protocol = detail::trim(r.fields[4]);
        if (rec.protocol.empty()) throw malformed_row(r.line_no);
        if (r.fields.size() >= 6) rec.info = r.fields[5];
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw empty_input();
    return records;
}

inline std::vector<PacketRecord> parse_capture_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error(path);
    return parse_capture_csv(f);
}

/// Keep records whose protocol is in `allowed` (case-insensitive), preserving order.
inline std::vector<PacketRecord> filter_transport(const std::vector<PacketRecord>& records,
                                                  const std::set<std::string>& allowed = {"TCP",
                                                                                          "UDP"}) {
    std::set<std::string> norm;
    for (const auto& a : allowed) norm.insert(detail::upper(a));
    std::vector<PacketRecord> out;
    for (const auto& r : records)
        if (norm.count(detail::upper(r.protocol))) out.push_back(r);
    return out;
}

/// Stable time-sorted merge of per-file capture parts. Each part must be
/// internally time-sorted (1 ms slack for capture jitter); times are
/// session-relative. Sequence numbers are kept as-is.
inline std::vector<PacketRecord> merge_captures(const std::vector<std::vector<PacketRecord>>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 1; j < parts[i].size(); ++j)
            if (parts[i][j].time < parts[i][j - 1].time - 1e-3) throw non_monotonic_part(i);
    }
    std::vector<PacketRecord> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const PacketRecord& a, const PacketRecord& b) { return a.time < b.time; });
    return all;
}

/// Count packets into half-open bins [k*step, (k+1)*step) anchored at 0.
/// Interior gaps are zero-filled; the series ends at the last packet's bin.
inline BinnedSeries bin_counts(const std::vector<PacketRecord>& records, double step_seconds) {
    if (records.empty()) throw empty_input();
    if (!(step_seconds > 0)) throw error("step_seconds must be positive");
    double max_time = 0;
    for (const auto& r : records) max_time = std::max(max_time, r.time);
    const auto nbins = static_cast<std::size_t>(std::floor(max_time / step_seconds)) + 1;
    BinnedSeries out;
    out.step_seconds = step_seconds;
    out.origin_seconds = 0.0;
    out.counts.assign(nbins, 0);
    for (const auto& r : records) {
        const auto k = static_cast<std::size_t>(std::floor(r.time / step_seconds));
        ++out.counts[k];
    }
    return out;
}

} // namespace netfc
