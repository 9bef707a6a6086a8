// Command-line front end: exact Suzuki-curve geometry as JSON/CSV/table
// reports.  Every command is deterministic; JSON output is byte-identical
// across runs.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "suzuki/curve.hpp"
#include "suzuki/dims.hpp"
#include "suzuki/expr.hpp"
#include "suzuki/forms.hpp"
#include "suzuki/gf.hpp"
#include "suzuki/linalg.hpp"
#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"
#include "suzuki/semigroup.hpp"
#include "suzuki/tuples.hpp"

using ojson = nlohmann::ordered_json;
using namespace suzuki;

namespace {

enum class Format { table, json, csv };

struct Output {
    Format format = Format::table;
    std::ostream* out = &std::cout;
};

ojson params_json(const SuzukiParams& p) {
    ojson j;
    j["n"] = p.n;
    j["q0"] = p.q0;
    j["q"] = p.q;
    j["genus"] = p.genus;
    j["m_embed"] = p.m_embed;
    j["generators"] = p.generators;
    j["canonical_pole"] = p.canonical_pole;
    j["oracle_only_formulas"] = p.oracle_only_formulas;
    return j;
}

ojson tuple_json(const ExponentTuple& t) { return ojson::array({t.a, t.b, t.c, t.d}); }

std::string scalar_str(const ojson& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    if (v.is_array()) { // arrays render space-separated in csv/table cells
        std::string s;
        for (const auto& e : v) {
            if (!s.empty())
                s += " ";
            s += scalar_str(e);
        }
        return s;
    }
    return v.dump();
}

void emit_rows_csv(std::ostream& out, const ojson& rows) {
    if (rows.empty())
        return;
    bool first = true;
    for (const auto& [k, v] : rows.front().items()) {
        out << (first ? "" : ",") << k;
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
            out << (first ? "" : ",") << scalar_str(v);
            first = false;
        }
        out << "\n";
    }
}

void emit_rows_table(std::ostream& out, const ojson& rows) {
    if (rows.empty())
        return;
    std::vector<std::string> keys;
    std::vector<std::size_t> width;
    for (const auto& [k, v] : rows.front().items()) {
        keys.push_back(k);
        width.push_back(k.size());
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        std::size_t i = 0;
        for (const auto& [k, v] : row.items()) {
            line.push_back(scalar_str(v));
            width[i] = std::max(width[i], line.back().size());
            ++i;
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t i = 0; i < keys.size(); ++i)
        out << (i ? "  " : "") << keys[i] << std::string(width[i] - keys[i].size(), ' ');
    out << "\n";
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
            out << (i ? "  " : "") << line[i] << std::string(width[i] - line[i].size(), ' ');
        out << "\n";
    }
}

// Uniform report envelope.  JSON carries the whole envelope; csv/table render
// the payload: a "rows" array becomes a grid, everything else key/value pairs.
void emit_report(const Output& o, const std::string& command, const SuzukiParams& p,
                 const ojson& result, const ojson& discrepancies = ojson::array()) {
    std::ostream& out = *o.out;
    if (o.format == Format::json) {
        ojson report;
        report["command"] = command;
        report["params"] = params_json(p);
        report["result"] = result;
        report["discrepancies"] = discrepancies;
        out << report.dump(2) << "\n";
        return;
    }
    if (result.contains("rows")) {
        if (o.format == Format::csv)
            emit_rows_csv(out, result["rows"]);
        else
            emit_rows_table(out, result["rows"]);
        for (const auto& [k, v] : result.items())
            if (k != "rows" && o.format == Format::table)
                out << k << ": " << scalar_str(v) << "\n";
    } else {
        for (const auto& [k, v] : result.items()) {
            if (o.format == Format::csv)
                out << k << "," << scalar_str(v) << "\n";
            else
                out << k << ": " << scalar_str(v) << "\n";
        }
    }
    for (const auto& d : discrepancies)
        out << (o.format == Format::csv ? "discrepancy," : "discrepancy: ")
            << scalar_str(d["id"]) << (o.format == Format::csv ? "," : " -- ")
            << scalar_str(d["detail"]) << "\n";
}

ojson low_range_discrepancy(const KappaClosed& k) {
    ojson d;
    d["id"] = "kappa-low-range-formula";
    d["detail"] = "quoted closed form C(t+4,4)-C(t+2,4) = " +
                  std::to_string(k.quoted_low_value) +
                  " disagrees with the computed kernel dimension " +
                  std::to_string(k.exact ? *k.exact : -1) + " at t = " + std::to_string(k.t);
    return d;
}

ojson embedding_dim_discrepancy(long long m, long long computed) {
    ojson d;
    d["id"] = "embedding-dim-next-very-ample";
    d["detail"] = "|" + std::to_string(m) +
                  "P| computed projective embedding dimension is " + std::to_string(computed) +
                  ", not 9 as sometimes quoted";
    return d;
}

ojson w_relation_discrepancy(const SuzukiParams& p) {
    ojson d;
    d["id"] = "w-relation-exponent";
    d["detail"] = "the relation w^q0 = x^q0 y + v was applied; the variant with x^q fails "
                  "pole-order bookkeeping (q0 = " +
                  std::to_string(p.q0) + ")";
    return d;
}

// ---------------------------------------------------------------------------
// subcommand payload builders

ojson cmd_gaps(const SuzukiParams& p) {
    auto table = build_table(p);
    auto gs = table.gaps();
    ojson rows = ojson::array();
    for (long long g : gs) {
        ojson r;
        r["gap"] = g;
        rows.push_back(r);
    }
    ojson result;
    result["genus"] = p.genus;
    result["gap_count"] = static_cast<long long>(gs.size());
    result["frobenius"] = table.frobenius();
    result["rows"] = rows;
    return result;
}

ojson cmd_dim(const SuzukiParams& p, long long m) {
    auto table = table_covering(p, m);
    ojson result;
    result["m"] = m;
    result["dim"] = table.count_up_to(m);
    return result;
}

ojson dim_row(const DimReport& r) {
    ojson row;
    row["t"] = r.t;
    row["dim_closed"] = r.dim_closed ? ojson(*r.dim_closed) : ojson(nullptr);
    row["dim_oracle"] = r.dim_oracle;
    row["agree"] = r.agree;
    row["case"] = r.case_label;
    return row;
}

ojson cmd_dim_table(const SuzukiParams& p, long long tmax) {
    auto table = table_covering(p, tmax * p.m_embed);
    ojson rows = ojson::array();
    for (long long t = 0; t <= tmax; ++t)
        rows.push_back(dim_row(dim_report(p, table, t)));
    ojson result;
    result["rows"] = rows;
    return result;
}

ojson kappa_row(const SuzukiParams& p, const Gf2m& F, long long t, ojson* discrepancies) {
    ojson row;
    row["t"] = t;
    row["kappa_rank"] = kappa_rank(p, t);
    if (p.q * p.q + 1 > t * p.m_embed)
        row["kappa_eval"] = kappa_eval(p, F, t);
    else
        row["kappa_eval"] = nullptr; // point count within the degree bound: no certificate
    if (p.q0 >= 4 && t >= 2) {
        auto k = kappa_closed(p, t);
        if (k.exact)
            row["kappa_closed_or_bound"] = *k.exact;
        else
            row["kappa_closed_or_bound"] = ">=" + std::to_string(*k.lower_bound);
        if (k.low_range_discrepancy && discrepancies)
            discrepancies->push_back(low_range_discrepancy(k));
    } else {
        row["kappa_closed_or_bound"] = nullptr;
    }
    row["quadric_multiples_dim"] = (t >= 2) ? ojson(quadric_multiples(p, t).dim) : ojson(nullptr);
    return row;
}

ojson cmd_basis(const SuzukiParams& p, long long m) {
    ojson rows = ojson::array();
    auto basis = basis_tuples(p, m);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ojson r;
        r["index"] = i;
        r["tuple"] = tuple_json(basis[i]);
        r["norm"] = norm(basis[i], p);
        rows.push_back(r);
    }
    ojson result;
    result["m"] = m;
    result["dim"] = static_cast<long long>(basis.size());
    result["rows"] = rows;
    return result;
}

ojson cmd_normalize(const SuzukiParams& p, const std::vector<long long>& in) {
    ExponentTuple t{in[0], in[1], in[2], in[3]};
    ExponentTuple c = normalize(t, p);
    ojson result;
    result["input"] = tuple_json(t);
    result["canonical"] = tuple_json(c);
    result["norm"] = norm(c, p);
    return result;
}

ojson cmd_reduce(const SuzukiParams& p, const std::string& text, ojson* discrepancies) {
    FFPoly poly = parse_expr(text);
    ReduceStats stats;
    ReduceOptions opts;
    opts.stats = &stats;
    FFPoly red = reduce(poly, p, opts);
    if (stats.rule_uses[2] > 0 && discrepancies)
        discrepancies->push_back(w_relation_discrepancy(p));
    ojson rows = ojson::array();
    for (const auto& [t, c] : red.terms()) {
        ojson r;
        r["tuple"] = tuple_json(t);
        r["norm"] = norm(t, p);
        rows.push_back(r);
    }
    ojson result;
    result["input"] = text;
    result["canonical"] = print_expr(red, p);
    result["steps"] = stats.steps;
    result["rows"] = rows;
    return result;
}

ojson cmd_quadric(const SuzukiParams& p) {
    auto k = unique_quadric(p);
    ojson result;
    result["t"] = 2;
    result["dim"] = k.dim;
    result["support"] = ojson::array({"x2^2", "x1 x3", "x4 x5"});
    ojson monos = ojson::array();
    auto ms = monomials(2);
    for (std::size_t j = 0; j < ms.size(); ++j)
        if (k.basis.get(0, j))
            monos.push_back(ms[j]);
    result["monomials"] = monos;
    return result;
}

ojson cmd_sigma(const SuzukiParams& p, long long t) {
    auto table = table_covering(p, t * p.m_embed);
    auto [image, target] = sigma_rank(p, table, t);
    ojson result;
    result["t"] = t;
    result["image_dim"] = image;
    result["target_dim"] = target;
    result["surjective"] = (image == target);
    return result;
}

ojson cmd_mu(const SuzukiParams& p, long long alpha, long long beta) {
    auto table = table_covering(p, (alpha + beta) * p.m_embed);
    auto [image, target] = mu_rank(p, table, alpha, beta);
    ojson result;
    result["alpha"] = alpha;
    result["beta"] = beta;
    result["image_dim"] = image;
    result["target_dim"] = target;
    result["surjective"] = (image == target);
    return result;
}

ojson cmd_very_ample(const SuzukiParams& p, std::optional<long long> m, ojson* discrepancies) {
    auto table = build_table(p);
    ojson result;
    if (m) {
        result["m"] = *m;
        bool va = table.is_very_ample(*m);
        result["very_ample"] = va;
        result["embedding_dimension"] = va ? ojson(table.embedding_dimension(*m)) : ojson(nullptr);
        return result;
    }
    long long smallest = table.smallest_very_ample();
    result["smallest_very_ample"] = smallest;
    result["embedding_dimension"] = table.embedding_dimension(smallest);
    long long next = smallest + 1;
    while (!table.is_very_ample(next))
        ++next;
    long long next_dim = table.embedding_dimension(next);
    result["next_very_ample"] = next;
    result["next_embedding_dimension"] = next_dim;
    if (discrepancies && next == 2 * p.q + 2 * p.q0 + 1 && next_dim != 9)
        discrepancies->push_back(embedding_dim_discrepancy(next, next_dim));
    return result;
}

void stream_points(const Output& o, const SuzukiParams& p, const Gf2m& F) {
    std::ostream& out = *o.out;
    if (o.format == Format::csv)
        out << "x,y,v,w\n";
    for (const auto& pt : enumerate_points(p, F)) {
        auto [v, w] = eval_vw(F, p, pt);
        if (o.format == Format::json) {
            ojson j;
            j["x"] = fe_to_hex(pt.x);
            j["y"] = fe_to_hex(pt.y);
            j["v"] = fe_to_hex(v);
            j["w"] = fe_to_hex(w);
            out << j.dump() << "\n";
        } else {
            const char* sep = (o.format == Format::csv) ? "," : " ";
            out << fe_to_hex(pt.x) << sep << fe_to_hex(pt.y) << sep << fe_to_hex(v) << sep
                << fe_to_hex(w) << "\n";
        }
    }
}

// ---------------------------------------------------------------------------
// verify: the full invariant suite for one n

struct Verifier {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !detail.empty())
            out << ": " << detail;
        out << "\n";
        if (!ok)
            ++failures;
    }

    template <class Fn> void run(const std::string& name, Fn&& fn) {
        try {
            fn();
            check(name, true);
        } catch (const std::exception& e) {
            check(name, false, e.what());
        }
    }
};

#define VCHECK(cond)                                                                               \
    do {                                                                                           \
        if (!(cond))                                                                               \
            throw std::runtime_error("failed: " #cond);                                           \
    } while (0)

int cmd_verify(const SuzukiParams& p, std::ostream& out) {
    Verifier v{out};
    Gf2m F(p.n);
    long long tmax = 2 * p.q0 + 3;
    auto table = table_covering(p, tmax * p.m_embed);
    auto points = enumerate_points(p, F);

    v.run("params-identities", [&] {
        VCHECK(p.q == 2 * p.q0 * p.q0);
        VCHECK(p.canonical_pole == 2 * (p.q0 - 1) * p.m_embed);
        VCHECK(p.generators[3] - p.generators[2] == 1);
    });
    v.run("gap-count-equals-genus", [&] {
        VCHECK(static_cast<long long>(table.gaps().size()) == p.genus);
    });
    v.run("frobenius-equals-2g-1", [&] { VCHECK(table.frobenius() == 2 * p.genus - 1); });
    v.run("membership-vs-exhaustive-search", [&] {
        for (long long s = 0; s <= 3 * p.m_embed; ++s) {
            bool found = false;
            long long limit = s / p.q + 1;
            for (long long a = 0; a <= limit && !found; ++a)
                for (long long b = 0; a + b <= limit && !found; ++b)
                    for (long long c = 0; a + b + c <= limit && !found; ++c) {
                        long long rest = s - norm({a, b, c, 0}, p);
                        if (rest >= 0 && rest % p.generators[3] == 0 &&
                            rest / p.generators[3] + a + b + c <= limit)
                            found = true;
                    }
            VCHECK(table.member(s) == found);
        }
    });
    v.run("field-axioms", [&] {
        std::mt19937_64 rng(0xace5u);
        long long trials = (p.n == 1) ? 0 : 10000;
        if (p.n == 1) {
            for (Fe a = 0; a < F.order(); ++a)
                for (Fe b = 0; b < F.order(); ++b)
                    for (Fe c = 0; c < F.order(); ++c) {
                        VCHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                        VCHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    }
        }
        std::uniform_int_distribution<Fe> dist(0, static_cast<Fe>(F.order() - 1));
        for (long long i = 0; i < trials; ++i) {
            Fe a = dist(rng), b = dist(rng), c = dist(rng);
            VCHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            VCHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            VCHECK(F.add(a, a) == 0);
        }
        for (Fe a = 0; a < F.order(); ++a) {
            VCHECK(F.pow(a, static_cast<unsigned long long>(F.order())) == a);
            VCHECK(F.mul(F.sqrt(a), F.sqrt(a)) == a);
            if (a)
                VCHECK(F.mul(a, F.inv(a)) == 1);
        }
    });
    v.run("normalize-properties", [&] {
        for (long long a = 0; a <= 3; ++a)
            for (long long b = 0; b <= 4; ++b)
                for (long long c = 0; c <= 2 * p.q0; ++c)
                    for (long long d = 0; d <= 2 * p.q0; ++d) {
                        ExponentTuple t{a, b, c, d};
                        auto ct = normalize(t, p);
                        VCHECK(is_canonical(ct, p));
                        VCHECK(norm(ct, p) == norm(t, p));
                        VCHECK(normalize(ct, p) == ct);
                    }
    });
    v.run("norm-injective-on-canonical", [&] {
        std::set<long long> seen;
        for (const auto& t : basis_tuples(p, 3 * p.m_embed))
            VCHECK(seen.insert(norm(t, p)).second);
    });
    v.run("basis-size-equals-dim", [&] {
        for (long long m = 0; m <= 2 * p.genus; m += (p.n < 3 ? 1 : 7))
            VCHECK(static_cast<long long>(basis_tuples(p, m).size()) == table.count_up_to(m));
    });
    v.run("norm-sum-equivalence", [&] {
        for (long long t = 1; t <= p.q0 - 1; ++t)
            for (long long a = 0; a <= t + 2; ++a)
                for (long long b = 0; b <= t + 2; ++b)
                    for (long long c = 0; c <= t + 2; ++c)
                        for (long long d = 0; d <= t + 2; ++d) {
                            auto [x, y] = norm_sum_equiv(p, t, {a, b, c, d});
                            VCHECK(x == y);
                        }
    });
    v.run("unit-sum-decomposition", [&] {
        for (long long a = 0; a <= 2; ++a)
            for (long long b = 0; b <= 2; ++b)
                for (long long c = 0; c <= 2; ++c)
                    for (long long d = 0; d <= 2; ++d) {
                        ExponentTuple t{a, b, c, d};
                        auto parts = unit_sum_decomposition(t, t.coord_sum() + 1);
                        ExponentTuple sum{};
                        for (const auto& u : parts) {
                            VCHECK(u.coord_sum() <= 1);
                            sum = sum + u;
                        }
                        VCHECK(sum == t);
                    }
    });
    v.run("pole-order-witness", [&] {
        long long t = 2 * p.q0 + 1;
        for (long long s = 0; s <= t * p.m_embed; ++s) {
            if (!table.member(s))
                continue;
            auto w = pole_order_witness(p, table, s, t);
            VCHECK(norm(w, p) == s);
            VCHECK(w.coord_sum() <= t);
        }
    });
    if (p.q0 >= 4) {
        v.run("dim-closed-vs-oracle", [&] {
            for (long long t = 0; t <= tmax; ++t)
                VCHECK(dim_L_closed(p, t) == table.count_up_to(t * p.m_embed));
        });
        v.run("kappa-closed-vs-oracle", [&] {
            for (long long t = 2; t <= tmax; ++t) {
                if (t > p.q0 && t < 2 * p.q0 + 1)
                    continue;
                auto k = kappa_closed(p, t);
                VCHECK(k.exact &&
                       *k.exact == binom(t + 4, 4) - table.count_up_to(t * p.m_embed));
            }
        });
    } else {
        v.check("dim-closed-vs-oracle (skipped: q0 < 4, oracle-only range)", true);
    }
    v.run("curve-identity-reduces-to-zero", [&] { VCHECK(verify_curve_identity(p)); });
    v.run("rewrite-rules-vanish-at-points", [&] {
        for (const auto& r : rules(p)) {
            FFPoly diff;
            diff.add_term(r.lhs, 1);
            diff.add_term(r.rhs[0], 1);
            diff.add_term(r.rhs[1], 1);
            for (const auto& pt : points)
                VCHECK(eval_ffpoly(F, p, diff, pt) == 0);
        }
    });
    v.run("reduce-strategy-independence", [&] {
        std::mt19937_64 rng(0x5eedu);
        std::uniform_int_distribution<long long> ea(0, 2 * p.q0 + 4), eb(0, 2 * p.q0 + 2),
            ec(0, p.q0 + 2), ed(0, p.q0 + 2);
        for (int i = 0; i < 1000; ++i) {
            FFPoly poly;
            for (int k = 0; k < 6; ++k)
                poly.add_term({ea(rng), eb(rng), ec(rng), ed(rng)}, 1);
            ReduceOptions opts;
            opts.order = RuleOrder::randomized;
            opts.seed = rng();
            VCHECK(reduce(poly, p) == reduce(poly, p, opts));
        }
    });
    v.run("eval-reduce-compatibility", [&] {
        std::mt19937_64 rng(0xeea1u);
        std::uniform_int_distribution<long long> ea(0, 2 * p.q0 + 4), eb(0, 2 * p.q0 + 2),
            ec(0, p.q0 + 2), ed(0, p.q0 + 2);
        // all points for n <= 2 (the contract); a deterministic sample beyond
        std::size_t stride = (p.n <= 2) ? 1 : points.size() / 4096;
        for (int i = 0; i < 100; ++i) {
            FFPoly poly;
            for (int k = 0; k < 6; ++k)
                poly.add_term({ea(rng), eb(rng), ec(rng), ed(rng)}, 1);
            FFPoly red = reduce(poly, p);
            for (std::size_t j = 0; j < points.size(); j += stride)
                VCHECK(eval_ffpoly(F, p, poly, points[j]) ==
                       eval_ffpoly(F, p, red, points[j]));
        }
    });
    v.run("point-count", [&] {
        VCHECK(static_cast<long long>(points.size()) == p.q * p.q);
    });
    v.run("embedded-points-distinct-and-on-quadric", [&] {
        std::set<EmbeddedPoint> seen;
        FFPoly quad;
        quad.add_term({0, 2, 0, 0}, 1);
        quad.add_term({1, 0, 1, 0}, 1);
        quad.add_term({0, 0, 0, 1}, 1);
        for (const auto& pt : points) {
            VCHECK(seen.insert(embed(F, p, pt)).second);
            VCHECK(eval_ffpoly(F, p, quad, pt) == 0);
        }
        VCHECK(seen.insert(embed_infinity(p)).second);
    });
    v.run("unique-quadric", [&] { VCHECK(unique_quadric(p).dim == 1); });
    v.run("quadric-multiples-structure", [&] {
        for (long long t = 2; t <= p.q0 + 1; ++t) {
            auto k = form_kernel(p, t);
            auto qm = quadric_multiples(p, t);
            VCHECK(qm.dim == binom4(t + 2));
            BitRowSpace kernel_space(k.basis.cols());
            for (std::size_t i = 0; i < k.basis.rows(); ++i)
                kernel_space.insert(k.basis.row(i));
            VCHECK(kernel_space.dim() == static_cast<std::size_t>(k.dim));
            if (t <= p.q0)
                VCHECK(qm.dim == k.dim);
            else
                VCHECK(qm.dim < k.dim);
        }
    });
    v.run("extra-forms", [&] { VCHECK(extra_forms(p, F).count >= 4); });
    v.run("sigma-surjective-on-covered-ranges", [&] {
        for (long long t = 1; t <= p.q0; ++t) {
            auto [img, tgt] = sigma_rank(p, table, t);
            VCHECK(img == tgt);
        }
        for (long long t = 2 * p.q0 + 1; t <= 2 * p.q0 + 2; ++t) {
            auto [img, tgt] = sigma_rank(p, table, t);
            VCHECK(img == tgt);
        }
    });
    {
        std::ostringstream mid;
        for (long long t = p.q0 + 1; t <= 2 * p.q0; ++t) {
            auto [img, tgt] = sigma_rank(p, table, t);
            mid << " t=" << t << ":(" << img << "," << tgt << ")";
        }
        v.check("sigma-midrange-reported (no assertion)" + mid.str(), true);
    }
    v.run("mu-ranks-surjective", [&] {
        for (long long a = 0; a <= p.q0 - 1; ++a)
            for (long long b = 0; a + b <= p.q0 - 1; ++b) {
                auto [img, tgt] = mu_rank(p, table, a, b);
                VCHECK(img == tgt);
            }
    });
    {
        long long kmax = (p.n <= 2) ? tmax : p.q0 + 1;
        long long kstop = kmax;
        for (long long t = 2; t <= kmax; ++t) {
            if (p.q * p.q + 1 <= t * p.m_embed ||
                (p.q * p.q + 1) * binom(t + 4, 4) > 50'000'000) {
                kstop = t - 1; // degree bound or evaluation matrix too large
                break;
            }
        }
        long long kend = kstop;
        v.run("kappa-oracle-agreement (t=2.." + std::to_string(kend) + ")", [&, kend] {
            for (long long t = 2; t <= kend; ++t)
                VCHECK(kappa_rank(p, t) == kappa_eval(p, F, t));
        });
    }
    v.run("kernel-field-extension-invariance", [&] {
        for (long long t = 2; t <= 3; ++t) {
            auto M = reduction_matrix(p, t);
            GfqMatrix Mq(F, M.rows(), M.cols());
            for (std::size_t r = 0; r < M.rows(); ++r)
                for (std::size_t c = 0; c < M.cols(); ++c)
                    if (M.get(r, c))
                        Mq.at(r, c) = 1;
            VCHECK(M.cols() - rank_gf2(M) == Mq.kernel_dim());
        }
    });
    v.run("very-ample", [&] {
        VCHECK(table.smallest_very_ample() == p.m_embed);
        VCHECK(table.embedding_dimension(p.m_embed) == 4);
    });

    out << (v.failures == 0 ? "ALL CHECKS PASSED" : "FAILURES: " + std::to_string(v.failures))
        << "\n";
    return v.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact projective geometry of smooth Suzuki-curve models in P^4"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    long long n = 0;
    std::string format = "table";
    std::string out_path;
    app.add_option("--n", n, "family index n (q0 = 2^n)")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    auto* c_params = app.add_subcommand("params", "derived constants of the family member");
    auto* c_gaps = app.add_subcommand("gaps", "semigroup gaps and Frobenius number");
    auto* c_dim = app.add_subcommand("dim", "dim L(m P_inf)");
    long long dim_m = 0;
    c_dim->add_option("--m", dim_m, "pole-order bound m")->required();
    auto* c_dimtab = app.add_subcommand("dim-table", "dimension table for t = 0..tmax");
    long long dimtab_tmax = 12;
    c_dimtab->add_option("--tmax", dimtab_tmax, "largest t")->capture_default_str();
    auto* c_kappa = app.add_subcommand("kappa", "degree-t forms vanishing on the curve");
    long long kappa_t = 0;
    bool kappa_kernel = false;
    c_kappa->add_option("--t", kappa_t, "form degree")->required();
    c_kappa->add_flag("--kernel", kappa_kernel, "include the kernel basis vectors");
    auto* c_kappatab = app.add_subcommand("kappa-table", "kappa table for t = 2..tmax");
    long long kappatab_tmax = 5;
    c_kappatab->add_option("--tmax", kappatab_tmax, "largest t")->capture_default_str();
    auto* c_basis = app.add_subcommand("basis", "monomial basis of L(m P_inf)");
    long long basis_m = 0;
    c_basis->add_option("--m", basis_m, "pole-order bound m")->required();
    auto* c_norm = app.add_subcommand("normalize", "canonical form of an exponent tuple");
    std::vector<long long> norm_tuple;
    c_norm->add_option("--tuple", norm_tuple, "exponents a,b,c,d")->delimiter(',')->expected(4)
        ->required();
    auto* c_reduce = app.add_subcommand("reduce", "rewrite an expression to canonical form");
    std::string reduce_expr;
    c_reduce->add_option("expression", reduce_expr, "sum of monomials in x, y, v, w")->required();
    auto* c_points = app.add_subcommand("points", "affine rational points with v, w (hex)");
    auto* c_quadric = app.add_subcommand("quadric", "the unique quadric through the curve");
    auto* c_sigma = app.add_subcommand("sigma", "product-map ranks");
    long long sigma_t = 0, mu_alpha = -1, mu_beta = -1;
    c_sigma->add_option("--t", sigma_t, "t-fold product map rank");
    c_sigma->add_option("--alpha", mu_alpha, "pair map: left factor");
    c_sigma->add_option("--beta", mu_beta, "pair map: right factor");
    auto* c_va = app.add_subcommand("very-ample", "very-ampleness of |m P_inf|");
    long long va_m = -1;
    c_va->add_option("--m", va_m, "check a specific m");
    auto* c_verify = app.add_subcommand("verify", "run the full invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    Output output;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        output.out = &file;
    }
    output.format = (format == "json") ? Format::json
                    : (format == "csv") ? Format::csv
                                        : Format::table;

    try {
        SuzukiParams p = make_params(n);
        ojson discrepancies = ojson::array();

        if (*c_params) {
            emit_report(output, "params", p, params_json(p));
        } else if (*c_gaps) {
            emit_report(output, "gaps", p, cmd_gaps(p));
        } else if (*c_dim) {
            emit_report(output, "dim", p, cmd_dim(p, dim_m));
        } else if (*c_dimtab) {
            emit_report(output, "dim-table", p, cmd_dim_table(p, dimtab_tmax));
        } else if (*c_kappa) {
            Gf2m F(p.n);
            ojson result = kappa_row(p, F, kappa_t, &discrepancies);
            if (kappa_kernel) {
                auto k = form_kernel(p, kappa_t);
                auto ms = monomials(kappa_t);
                ojson kernel = ojson::array();
                for (std::size_t i = 0; i < k.basis.rows(); ++i) {
                    ojson vec = ojson::array();
                    for (std::size_t j = 0; j < ms.size(); ++j)
                        if (k.basis.get(i, j)) {
                            ojson entry;
                            entry["monomial"] = ms[j];
                            entry["coeff"] = 1;
                            vec.push_back(entry);
                        }
                    kernel.push_back(vec);
                }
                result["kernel"] = kernel;
            }
            emit_report(output, "kappa", p, result, discrepancies);
        } else if (*c_kappatab) {
            Gf2m F(p.n);
            ojson rows = ojson::array();
            for (long long t = 2; t <= kappatab_tmax; ++t)
                rows.push_back(kappa_row(p, F, t, &discrepancies));
            ojson result;
            result["rows"] = rows;
            emit_report(output, "kappa-table", p, result, discrepancies);
        } else if (*c_basis) {
            emit_report(output, "basis", p, cmd_basis(p, basis_m));
        } else if (*c_norm) {
            emit_report(output, "normalize", p, cmd_normalize(p, norm_tuple));
        } else if (*c_reduce) {
            ojson result = cmd_reduce(p, reduce_expr, &discrepancies);
            if (output.format == Format::table) {
                *output.out << result["canonical"].get<std::string>() << "\n";
            } else {
                emit_report(output, "reduce", p, result, discrepancies);
            }
        } else if (*c_points) {
            Gf2m F(p.n);
            stream_points(output, p, F);
        } else if (*c_quadric) {
            emit_report(output, "quadric", p, cmd_quadric(p));
        } else if (*c_sigma) {
            if (mu_alpha >= 0 || mu_beta >= 0) {
                if (mu_alpha < 0 || mu_beta < 0)
                    throw std::invalid_argument("sigma: --alpha and --beta go together");
                emit_report(output, "sigma", p, cmd_mu(p, mu_alpha, mu_beta));
            } else {
                if (sigma_t < 1)
                    throw std::invalid_argument("sigma: provide --t >= 1 or --alpha/--beta");
                emit_report(output, "sigma", p, cmd_sigma(p, sigma_t));
            }
        } else if (*c_va) {
            ojson result = cmd_very_ample(p, va_m >= 0 ? std::optional<long long>(va_m)
                                                       : std::nullopt,
                                          &discrepancies);
            emit_report(output, "very-ample", p, result, discrepancies);
        } else if (*c_verify) {
            return cmd_verify(p, *output.out);
        }
    } catch (const ParseError& e) {
        std::cerr << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
