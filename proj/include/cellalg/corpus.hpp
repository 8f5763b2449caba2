#pragma once

// Named scheme specs and the registered verification corpus, shared by the
// tests and the command-line tool.
//
// Spec grammar:
//   rank2:N  discrete:N  thin-cyclic:N  thin-abelian:A:B[:C...]  thin-sym:K
//   thin-dihedral:M  thin-quaternion  hamming:D:Q  johnson:V:K
//   schurian:N[:G...]   (each generator an image list such as 1.2.0)
//   direct-sum(SPEC,SPEC)

#include "cellalg/generators.hpp"

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellalg {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::size_t parse_count(const std::string& s, const std::string& spec)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
        throw std::invalid_argument("bad parameter '" + s + "' in '" + spec + "'");
    return static_cast<std::size_t>(std::stoul(s));
}

} // namespace detail

inline constexpr std::size_t max_spec_points = 512;

inline Scheme build_scheme(const std::string& spec)
{
    if (spec.rfind("direct-sum(", 0) == 0) {
        if (spec.back() != ')')
            throw std::invalid_argument("unbalanced direct-sum spec '" + spec + "'");
        const std::string inner = spec.substr(11, spec.size() - 12);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(')
                ++depth;
            else if (inner[i] == ')')
                --depth;
            else if (inner[i] == ',' && depth == 0) {
                const auto a = build_scheme(inner.substr(0, i));
                const auto b = build_scheme(inner.substr(i + 1));
                if (a.size() + b.size() > max_spec_points)
                    throw std::invalid_argument("direct sum exceeds the point cap");
                return direct_sum(a, b);
            }
        }
        throw std::invalid_argument("direct-sum spec needs two operands: '" + spec + "'");
    }

    const auto parts = detail::split(spec, ':');
    const std::string& family = parts[0];
    std::vector<std::size_t> nums;
    auto need = [&](std::size_t count) {
        if (parts.size() != count + 1)
            throw std::invalid_argument("family '" + family + "' takes " + std::to_string(count) +
                                        " parameter(s): '" + spec + "'");
        for (std::size_t i = 1; i <= count; ++i)
            nums.push_back(detail::parse_count(parts[i], spec));
    };
    auto cap = [&](std::size_t n) {
        if (n > max_spec_points)
            throw std::invalid_argument("'" + spec + "' exceeds the point cap of " + std::to_string(max_spec_points));
    };

    if (family == "rank2") {
        need(1);
        cap(nums[0]);
        return rank2(nums[0]);
    }
    if (family == "discrete") {
        need(1);
        cap(nums[0]);
        return discrete(nums[0]);
    }
    if (family == "thin-cyclic") {
        need(1);
        cap(nums[0]);
        return thin_group_scheme(cyclic_group(nums[0]));
    }
    if (family == "thin-abelian") {
        if (parts.size() < 2)
            throw std::invalid_argument("thin-abelian needs at least one factor order");
        std::size_t order = 1;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            nums.push_back(detail::parse_count(parts[i], spec));
            if (nums.back() == 0)
                throw std::invalid_argument("cyclic factor of order 0");
            order *= nums.back();
            cap(order);
        }
        GroupTable g = cyclic_group(nums[0]);
        for (std::size_t i = 1; i < nums.size(); ++i)
            g = direct_product(g, cyclic_group(nums[i]));
        return thin_group_scheme(g);
    }
    if (family == "thin-sym") {
        need(1);
        return thin_group_scheme(symmetric_group(nums[0]));
    }
    if (family == "thin-dihedral") {
        need(1);
        cap(2 * nums[0]);
        return thin_group_scheme(dihedral_group(nums[0]));
    }
    if (family == "thin-quaternion") {
        need(0);
        return thin_group_scheme(quaternion_group());
    }
    if (family == "hamming") {
        need(2);
        return hamming(nums[0], nums[1]);
    }
    if (family == "johnson") {
        need(2);
        return johnson(nums[0], nums[1]);
    }
    if (family == "schurian") {
        if (parts.size() < 2)
            throw std::invalid_argument("schurian needs a point count");
        const std::size_t n = detail::parse_count(parts[1], spec);
        if (n == 0)
            throw std::invalid_argument("schurian needs at least one point");
        cap(n);
        std::vector<Permutation> gens;
        for (std::size_t i = 2; i < parts.size(); ++i) {
            std::vector<Point> image;
            for (const auto& x : detail::split(parts[i], '.'))
                image.push_back(detail::parse_count(x, spec));
            gens.emplace_back(std::move(image));
        }
        return schurian(gens, n);
    }
    throw std::invalid_argument("unknown scheme family '" + family + "'");
}

struct CorpusEntry {
    std::string id; ///< a spec accepted by build_scheme
    std::uint64_t seed = 1;
};

struct CorpusOptions {
    std::string filter;           ///< ECMAScript regex searched in the id; empty keeps all
    std::size_t max_points = 64;  ///< entries with more points are skipped
    std::uint64_t seed = 1;
};

inline const std::vector<std::string>& registered_specs()
{
    static const std::vector<std::string> specs = [] {
        std::vector<std::string> s;
        for (int n = 1; n <= 12; ++n)
            s.push_back("thin-cyclic:" + std::to_string(n));
        for (const char* g : {"thin-abelian:2:2", "thin-abelian:2:4", "thin-abelian:2:2:2", "thin-abelian:2:6",
                              "thin-abelian:3:3", "thin-sym:3", "thin-dihedral:4", "thin-quaternion",
                              "thin-dihedral:5"})
            s.emplace_back(g);
        for (int n = 2; n <= 24; ++n)
            s.push_back("rank2:" + std::to_string(n));
        for (int n = 1; n <= 5; ++n)
            s.push_back("discrete:" + std::to_string(n));
        for (const char* g : {"hamming:2:2", "hamming:3:2", "hamming:2:3", "johnson:4:2", "johnson:5:2",
                              "johnson:6:2", "johnson:6:3"})
            s.emplace_back(g);
        for (const char* g : {
                 "schurian:3:1.0.2:1.2.0",      // S3 on 3 points
                 "schurian:3:1.0.2",            // <(0 1)> on 3 points
                 "schurian:2",                  // identity group
                 "schurian:5:1.2.3.4.0:4.3.2.1.0", // D5 on the pentagon
                 "schurian:5:1.2.0.3.4",        // C3 fixing two points
                 "schurian:4:1.0.2.3:0.1.3.2",  // two independent swaps
                 "schurian:6:1.0.3.2.5.4:2.3.4.5.0.1", // wreath-like action on three pairs
                 "schurian:6:1.2.0.3.4.5:0.1.2.4.5.3", // C3 x C3 on two triangles
             })
            s.emplace_back(g);
        for (const char* g : {"direct-sum(rank2:2,discrete:1)", "direct-sum(rank2:2,rank2:3)",
                              "direct-sum(rank2:2,rank2:2)", "direct-sum(rank2:3,rank2:3)",
                              "direct-sum(thin-cyclic:3,rank2:2)", "direct-sum(hamming:2:2,rank2:3)",
                              "direct-sum(discrete:1,discrete:1)", "direct-sum(rank2:4,discrete:1)",
                              "direct-sum(direct-sum(rank2:2,rank2:2),discrete:1)",
                              "direct-sum(rank2:3,direct-sum(rank2:2,discrete:1))"})
            s.emplace_back(g);
        return s;
    }();
    return specs;
}

/// The registered corpus after filtering, in registration order.
inline std::vector<CorpusEntry> corpus(const CorpusOptions& opt = {})
{
    std::vector<CorpusEntry> out;
    const std::regex re(opt.filter);
    for (const auto& id : registered_specs()) {
        if (!opt.filter.empty() && !std::regex_search(id, re))
            continue;
        if (build_scheme(id).size() > opt.max_points)
            continue;
        out.push_back({id, opt.seed});
    }
    return out;
}

} // namespace cellalg
