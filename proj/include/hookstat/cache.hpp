#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "hookstat/measure.hpp"

namespace hookstat {

/// Bump whenever any numeric path feeding the records changes.
inline constexpr int cache_schema_version = 1;

namespace detail {

// %.17g round-trips doubles; keys stay readable, values exact.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// hexfloat for payload values: exact and locale-free
inline std::string format_hex(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

inline double parse_hex(const std::string& s) {
    return std::strtod(s.c_str(), nullptr);
}

}  // namespace detail

/// On-disk store of MomentRecord, one text file per (k,l,beta,n).  Format:
///
///   hookstat-moments v<schema>
///   k <int>
///   l <int>
///   beta <decimal> <hexfloat>
///   n <int>
///   log_denominator <hexfloat>
///   row <p> <hexfloat>      (p = 1..k)
///   col <q> <hexfloat>      (q = 1..l)
///   end
///
/// Records from a different schema version are ignored and rewritten.
class MomentCache {
    std::filesystem::path dir_;

  public:
    explicit MomentCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    const std::filesystem::path& directory() const { return dir_; }

    std::filesystem::path record_path(const MeasureSpec& spec, Int n) const {
        std::ostringstream name;
        name << "moments_k" << spec.bound.k << "_l" << spec.bound.l << "_beta"
             << detail::format_double(spec.beta) << "_n" << n << ".rec";
        return dir_ / name.str();
    }

    std::optional<MomentRecord> load(const MeasureSpec& spec, Int n) const {
        std::ifstream in(record_path(spec, n));
        if (!in) return std::nullopt;
        std::string header, tag;
        if (!std::getline(in, header)) return std::nullopt;
        if (header != "hookstat-moments v" + std::to_string(cache_schema_version))
            return std::nullopt;
        MomentRecord rec;
        Int k = -1, l = -1;
        double beta_hex = 0;
        std::string beta_dec, hex;
        bool saw_end = false;
        while (in >> tag) {
            if (tag == "k") in >> k;
            else if (tag == "l") in >> l;
            else if (tag == "beta") { in >> beta_dec >> hex; beta_hex = detail::parse_hex(hex); }
            else if (tag == "n") in >> rec.n;
            else if (tag == "log_denominator") { in >> hex; rec.log_denominator = detail::parse_hex(hex); }
            else if (tag == "row") { Int p; in >> p >> hex; rec.log_row_numerators.push_back(detail::parse_hex(hex)); }
            else if (tag == "col") { Int q; in >> q >> hex; rec.log_col_numerators.push_back(detail::parse_hex(hex)); }
            else if (tag == "end") { saw_end = true; break; }
            else return std::nullopt;
        }
        if (!saw_end || k != spec.bound.k || l != spec.bound.l || rec.n != n ||
            beta_hex != spec.beta ||
            rec.log_row_numerators.size() != static_cast<std::size_t>(k) ||
            rec.log_col_numerators.size() != static_cast<std::size_t>(l))
            return std::nullopt;
        return rec;
    }

    void store(const MeasureSpec& spec, const MomentRecord& rec) const {
        const auto path = record_path(spec, rec.n);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << "hookstat-moments v" << cache_schema_version << "\n";
            out << "k " << spec.bound.k << "\n";
            out << "l " << spec.bound.l << "\n";
            out << "beta " << detail::format_double(spec.beta) << " "
                << detail::format_hex(spec.beta) << "\n";
            out << "n " << rec.n << "\n";
            out << "log_denominator " << detail::format_hex(rec.log_denominator) << "\n";
            for (std::size_t p = 0; p < rec.log_row_numerators.size(); ++p)
                out << "row " << p + 1 << " " << detail::format_hex(rec.log_row_numerators[p]) << "\n";
            for (std::size_t q = 0; q < rec.log_col_numerators.size(); ++q)
                out << "col " << q + 1 << " " << detail::format_hex(rec.log_col_numerators[q]) << "\n";
            out << "end\n";
        }
        std::filesystem::rename(tmp, path);
    }
};

/// Cache-aware moments: hit returns the stored record byte-for-byte, miss
/// computes and stores.
inline MomentRecord compute_moments_cached(const MeasureSpec& spec, Int n,
                                           const MomentCache* cache) {
    if (cache) {
        if (auto rec = cache->load(spec, n)) return *rec;
    }
    MomentRecord rec = compute_moments(spec, n);
    if (cache) cache->store(spec, rec);
    return rec;
}

}  // namespace hookstat
