#include "towerlab/scanner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

#include "towerlab/biquad.hpp"
#include "towerlab/quadforms.hpp"

namespace towerlab::scanner {

namespace {

using report::CheckResult;
using report::Verdict;

// Applies fn to every input on `threads` workers; outputs keep input order.
template <typename T>
std::vector<T> parallel_collect(const std::vector<std::uint64_t>& inputs, unsigned threads,
                                const std::function<std::optional<T>(std::uint64_t)>& fn)
{
    if (threads == 0)
        threads = default_threads();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(inputs.size() / 64 + 1)));
    std::vector<std::vector<T>> parts(threads);
    std::vector<std::thread> workers;
    const std::size_t chunk = (inputs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            const std::size_t lo = t * chunk, hi = std::min(inputs.size(), lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                if (auto v = fn(inputs[i]))
                    parts[t].push_back(std::move(*v));
            }
        });
    }
    for (auto& w : workers)
        w.join();
    std::vector<T> out;
    for (auto& part : parts)
        std::move(part.begin(), part.end(), std::back_inserter(out));
    return out;
}

void check_range(std::uint64_t p_max, std::uint64_t limit, const char* what)
{
    if (p_max > limit)
        throw std::out_of_range(std::string(what) + ": p_max " + std::to_string(p_max) + " exceeds "
                                + std::to_string(limit));
}

CheckResult make(std::string id, std::uint64_t p, std::uint64_t r, std::string expected, std::string provenance)
{
    CheckResult c;
    c.check_id = std::move(id);
    c.p = p;
    c.r = r;
    c.expected = std::move(expected);
    c.provenance = std::move(provenance);
    return c;
}

// Runs body; an exception becomes an error verdict carrying its message.
void run_check(report::VerificationReport& rep, CheckResult c, const std::function<void(CheckResult&)>& body)
{
    try {
        body(c);
    } catch (const std::exception& e) {
        c.verdict = Verdict::error;
        c.computed = "not evaluated";
        c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

unsigned default_threads()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

std::pair<BigInt, BigInt> minimal_ab(std::uint64_t p)
{
    if (p % 8 != 1 && p % 8 != 7)
        throw std::invalid_argument("minimal_ab: p must be +-1 mod 8");
    // The canonical generator is the totally positive associate of least a,
    // and a^2 - 2b^2 = p > 0 for it.
    const zsqrt2::ZSqrt2 pi = zsqrt2::split_rational_prime(p).primes[0].generator();
    return {pi.a, abs(pi.b)};
}

std::vector<std::uint64_t> qualifying_primes(std::uint64_t p_max, unsigned threads)
{
    check_range(p_max, kMaxScanP, "qualifying_primes");
    std::vector<std::uint64_t> candidates;
    const std::vector<bool> sieve = arith::prime_sieve(p_max);
    for (std::uint64_t p = 9; p <= p_max; p += 16) {
        if (sieve[p])
            candidates.push_back(p);
    }
    return parallel_collect<std::uint64_t>(candidates, threads, [](std::uint64_t p) -> std::optional<std::uint64_t> {
        if (arith::quartic_symbol_2(p) == -1)
            return p;
        return std::nullopt;
    });
}

std::vector<CondOnePair> enumerate_condition1(std::uint64_t p_max, const std::vector<std::uint64_t>& r_set,
                                              unsigned threads)
{
    check_range(p_max, kMaxScanP, "enumerate_condition1");
    std::vector<std::uint64_t> rs = r_set;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    for (std::uint64_t r : rs) {
        if (r % 4 != 3 || !arith::is_prime_u64(r))
            throw std::invalid_argument("enumerate_condition1: r = " + std::to_string(r)
                                        + " is not a prime = 3 mod 4");
    }
    const std::vector<std::uint64_t> ps = qualifying_primes(p_max, threads);
    auto groups = parallel_collect<std::vector<CondOnePair>>(
        ps, threads, [&](std::uint64_t p) -> std::optional<std::vector<CondOnePair>> {
            std::vector<CondOnePair> out;
            for (std::uint64_t r : rs) {
                if (r == p || arith::jacobi(static_cast<std::int64_t>(p), static_cast<std::int64_t>(r)) != -1)
                    continue;
                const zsqrt2::Splitting sp = zsqrt2::split_rational_prime(p);
                CondOnePair c;
                c.p = p;
                c.r = r;
                c.p1 = sp.primes[0].generator();
                c.p2 = sp.primes[1].generator();
                c.a = c.p1.a;
                c.b = abs(c.p1.b);
                out.push_back(std::move(c));
            }
            if (out.empty())
                return std::nullopt;
            return out;
        });
    std::vector<CondOnePair> pairs;
    for (auto& g : groups)
        std::move(g.begin(), g.end(), std::back_inserter(pairs));
    return pairs;
}

QuestionReport question_scan(std::uint64_t p_max, unsigned threads)
{
    check_range(p_max, kMaxScanP, "question_scan");
    QuestionReport rep;
    rep.p_max = p_max;
    rep.rows = parallel_collect<QuestionRow>(qualifying_primes(p_max, threads), threads,
                                             [](std::uint64_t p) -> std::optional<QuestionRow> {
                                                 QuestionRow row;
                                                 row.p = p;
                                                 std::tie(row.a, row.b) = minimal_ab(p);
                                                 const BigInt P(static_cast<unsigned long>(p));
                                                 row.a_symbol = arith::jacobi(row.a, P);
                                                 row.b_symbol = arith::jacobi(row.b, P);
                                                 return row;
                                             });
    for (const QuestionRow& row : rep.rows) {
        if (row.a_symbol != -1)
            rep.counterexamples.push_back(row.p);
        if (!row.equivalence_holds())
            rep.equivalence_failures.push_back(row.p);
    }
    return rep;
}

std::optional<Pell8Row> pell8_solution(std::uint64_t p)
{
    for (int sign : {8, -8}) {
        if (auto sol = arith::solve_norm_equation(static_cast<std::int64_t>(p), sign)) {
            Pell8Row row;
            row.p = p;
            row.solvable = true;
            row.sign = sign;
            row.x = sol->x;
            row.y = sol->y;
            return row;
        }
    }
    return std::nullopt;
}

Pell8Report pell8_scan(std::uint64_t p_max, unsigned threads)
{
    check_range(p_max, kMaxPell8P, "pell8_scan");
    Pell8Report rep;
    rep.p_max = p_max;
    rep.rows = parallel_collect<Pell8Row>(qualifying_primes(p_max, threads), threads,
                                          [](std::uint64_t p) -> std::optional<Pell8Row> {
                                              if (auto row = pell8_solution(p))
                                                  return row;
                                              Pell8Row none;
                                              none.p = p;
                                              return none;
                                          });
    for (const Pell8Row& row : rep.rows) {
        if (!row.solvable)
            rep.exceptional.push_back(row.p);
    }
    return rep;
}

report::VerificationReport verify_pair(std::uint64_t p, std::uint64_t r)
{
    if (!zsqrt2::satisfies_condition1(p, r))
        throw std::invalid_argument("verify_pair: (" + std::to_string(p) + ", " + std::to_string(r)
                                    + ") is not an admissible pair");
    report::VerificationReport rep;
    rep.title = "pair p = " + std::to_string(p) + ", r = " + std::to_string(r);
    const auto pr = static_cast<std::int64_t>(p * r);

    run_check(rep, make("C1", p, r, "2-class group of Q(sqrt pr) = (2)", "published-claim"), [&](CheckResult& c) {
        const auto cg = quadforms::class_group_of_radicand(pr);
        c.computed = join(cg.two_sylow);
        c.verdict = cg.two_sylow == std::vector<std::uint64_t>{2} ? Verdict::pass : Verdict::fail;
    });
    run_check(rep, make("C2", p, r, "2-part of h(Q(sqrt p, sqrt r)) = 1", "published-claim"), [&](CheckResult& c) {
        const auto f = biquad::kuroda_h(static_cast<std::int64_t>(p), static_cast<std::int64_t>(r));
        c.computed = std::to_string(f.two_part()) + " (h = " + std::to_string(f.h) + ", q = " + std::to_string(f.q) + ")";
        c.verdict = f.two_part() == 1 ? Verdict::pass : Verdict::fail;
    });
    run_check(rep, make("C3", p, r, "2-part of h(Q(sqrt2, sqrt pr)) = 4, A(k1) = (2,2)", "published-claim"),
              [&](CheckResult& c) {
                  const auto cert = biquad::rank_certificate_k1(p, r);
                  c.computed = std::to_string(cert.order_A_k1) + ", " + cert.structure;
                  c.detail = "p1 = " + cert.p1;
                  c.verdict = cert.order_A_k1 == 4 && cert.certified() ? Verdict::pass : Verdict::fail;
              });
    run_check(rep, make("C4", p, r, "2-part of h(Q(sqrt2, sqrt p)) = 2", "published-claim"), [&](CheckResult& c) {
        const auto f = biquad::kuroda_h(2, static_cast<std::int64_t>(p));
        c.computed = std::to_string(f.two_part());
        c.verdict = f.two_part() == 2 ? Verdict::pass : Verdict::fail;
    });
    run_check(rep, make("C5", p, r, r % 8 == 3 ? "(p1/r) = (p2/r) = -1" : "one -1 per row and column of (p_i/r_j)",
                        "published-claim"),
              [&](CheckResult& c) {
                  const auto rec = zsqrt2::inertia_classification(p, r);
                  if (rec.r_inert) {
                      c.computed = std::to_string(rec.inert_symbols[0]) + ", " + std::to_string(rec.inert_symbols[1]);
                  } else {
                      c.computed = "[[" + std::to_string(rec.matrix[0][0]) + "," + std::to_string(rec.matrix[0][1])
                                   + "],[" + std::to_string(rec.matrix[1][0]) + ","
                                   + std::to_string(rec.matrix[1][1]) + "]]";
                  }
                  c.verdict = rec.holds ? Verdict::pass : Verdict::fail;
              });

    std::vector<std::uint64_t> predictions;
    run_check(rep, make("C6", p, r, "(a/p) = -1 predicts #A(K1) = 2", "published-claim"), [&](CheckResult& c) {
        const auto [a, b] = minimal_ab(p);
        const int s = arith::jacobi(a, BigInt(static_cast<unsigned long>(p)));
        c.computed = "a = " + a.get_str() + ", (a/p) = " + std::to_string(s);
        if (s == -1) {
            predictions.push_back(2);
            c.computed += ", predicts 2";
            c.verdict = Verdict::pass;
        } else {
            c.verdict = Verdict::inapplicable;
        }
    });
    run_check(rep, make("C7", p, r, "x^2 - p y^2 = +-8 solvable predicts #A(K1) = 2", "published-claim"),
              [&](CheckResult& c) {
                  if (auto sol = pell8_solution(p)) {
                      predictions.push_back(2);
                      c.computed = "(" + sol->x.get_str() + ", " + sol->y.get_str() + ") for "
                                   + std::to_string(sol->sign) + ", predicts 2";
                      c.verdict = Verdict::pass;
                  } else {
                      c.computed = "unsolvable";
                      c.verdict = Verdict::inapplicable;
                  }
              });
    run_check(rep, make("C8", p, r, "C6 and C7 predictions agree", "derived"), [&](CheckResult& c) {
        c.computed.clear();
        for (auto v : predictions)
            c.computed += (c.computed.empty() ? "" : ", ") + std::to_string(v);
        if (predictions.empty())
            c.verdict = Verdict::inapplicable;
        else
            c.verdict = std::all_of(predictions.begin(), predictions.end(),
                                    [&](std::uint64_t v) { return v == predictions.front(); })
                            ? Verdict::pass
                            : Verdict::fail;
    });
    return rep;
}

std::string to_string(Stability s)
{
    switch (s) {
    case Stability::stable:
        return "stable";
    case Stability::violation:
        return "violation";
    case Stability::undetermined:
        return "undetermined";
    }
    return "?";
}

StabilityVerdict fukuda_stability_check(const std::vector<std::uint64_t>& values, std::size_t n0)
{
    StabilityVerdict v;
    for (std::size_t n = n0; n + 1 < values.size(); ++n) {
        if (values[n] == values[n + 1]) {
            v.first_repeat = n;
            break;
        }
    }
    if (!v.first_repeat)
        return v;
    for (std::size_t m = *v.first_repeat + 1; m < values.size(); ++m) {
        if (values[m] != values[*v.first_repeat]) {
            v.change_at = m;
            v.verdict = Stability::violation;
            return v;
        }
    }
    v.verdict = Stability::stable;
    return v;
}

}  // namespace towerlab::scanner
