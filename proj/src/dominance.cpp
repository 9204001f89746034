#include "cmcert/dominance.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cmcert {

// ---------------------------------------------------------------------------
// DenseBoxPoly

DenseBoxPoly::DenseBoxPoly(const Polynomial& p) : nvars_(p.nvars()), envelope_(p.degree_envelope()) {
    std::size_t total = 1;
    for (std::size_t i = nvars_; i-- > 0;) {
        strides_[i] = total;
        total *= envelope_[i] + 1u;
    }
    coeffs_.assign(total, Integer(0));
    for (const auto& [e, c] : p.terms()) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < nvars_; ++i) idx += e[i] * strides_[i];
        coeffs_[idx] = c;
    }
}

Polynomial DenseBoxPoly::to_polynomial() const {
    Polynomial p(nvars_);
    for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
        if (sgn(coeffs_[idx]) == 0) continue;
        Exponents e{};
        for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint8_t>((idx / strides_[i]) % (envelope_[i] + 1u));
        p.add_term(e, coeffs_[idx]);
    }
    return p;
}

std::size_t DenseBoxPoly::nonzero_terms() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

bool DenseBoxPoly::is_wpd() const {
    if (sgn(coeffs_.front()) < 0) return false;
    std::vector<Integer> s = coeffs_;
    // Cumulative sums along each axis turn coefficients into lower-box sums.
    for (std::size_t axis = 0; axis < nvars_; ++axis) {
        const std::size_t dim = envelope_[axis] + 1u;
        if (dim == 1) continue;
        const std::size_t inner = strides_[axis];
        const std::size_t block = inner * dim;
        for (std::size_t base = 0; base < s.size(); base += block)
            for (std::size_t k = 1; k < dim; ++k) {
                Integer* cur = &s[base + k * inner];
                const Integer* prev = cur - inner;
                for (std::size_t in = 0; in < inner; ++in) cur[in] += prev[in];
            }
    }
    return std::all_of(s.begin(), s.end(), [](const Integer& x) { return sgn(x) >= 0; });
}

DenseBoxPoly DenseBoxPoly::dilated(std::size_t axis) const {
    DenseBoxPoly out = *this;
    const std::size_t dim = envelope_[axis] + 1u;
    const std::size_t inner = strides_[axis];
    const std::size_t block = inner * dim;
    const unsigned top = envelope_[axis];
    for (std::size_t base = 0; base < out.coeffs_.size(); base += block)
        for (std::size_t k = 0; k < dim; ++k) {
            const unsigned shift = top - static_cast<unsigned>(k);
            if (shift == 0) continue;
            Integer* cur = &out.coeffs_[base + k * inner];
            for (std::size_t in = 0; in < inner; ++in)
                if (sgn(cur[in]) != 0) mpz_mul_2exp(cur[in].get_mpz_t(), cur[in].get_mpz_t(), shift);
        }
    return out;
}

DenseBoxPoly DenseBoxPoly::reflected(std::size_t axis) const {
    DenseBoxPoly out;
    out.nvars_ = nvars_;
    out.envelope_ = envelope_;
    out.strides_ = strides_;
    out.coeffs_.assign(coeffs_.size(), Integer(0));

    const std::size_t dim = envelope_[axis] + 1u;
    // Signed Pascal rows: (1 - x)^e = sum_k (-1)^k C(e,k) x^k.
    std::vector<std::vector<long>> pascal(dim);
    for (std::size_t e = 0; e < dim; ++e) {
        pascal[e].assign(e + 1, 1);
        for (std::size_t k = 1; k < e; ++k) pascal[e][k] = pascal[e - 1][k - 1] + pascal[e - 1][k];
    }
    for (auto& row : pascal)
        for (std::size_t k = 1; k < row.size(); k += 2) row[k] = -row[k];

    const std::size_t inner = strides_[axis];
    const std::size_t block = inner * dim;
    for (std::size_t base = 0; base < coeffs_.size(); base += block)
        for (std::size_t in = 0; in < inner; ++in)
            for (std::size_t e = 0; e < dim; ++e) {
                const Integer& c = coeffs_[base + e * inner + in];
                if (sgn(c) == 0) continue;
                for (std::size_t k = 0; k <= e; ++k) {
                    Integer& dst = out.coeffs_[base + k * inner + in];
                    const long m = pascal[e][k];
                    if (m > 0) mpz_addmul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
                    else mpz_submul_ui(dst.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-m));
                }
            }
    return out;
}

// ---------------------------------------------------------------------------
// Sparse-form operations

bool is_wpd(const Polynomial& p) { return DenseBoxPoly(p).is_wpd(); }

Polynomial rotate(const Polynomial& p, int k) {
    const int n = static_cast<int>(p.nvars());
    const int shift = ((k % n) + n) % n;
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents r{};
        for (int i = 0; i < n; ++i) r[(i + shift) % n] = e[i];
        out.add_term(r, c);
    }
    return out;
}

Polynomial dilate_first(const Polynomial& p) { return DenseBoxPoly(p).dilated(0).to_polynomial(); }

Polynomial reflect_first(const Polynomial& p) { return DenseBoxPoly(p).reflected(0).to_polynomial(); }

bool negative_at_origin(const Polynomial& p) { return sgn(p.coeff(Exponents{})) < 0; }

// ---------------------------------------------------------------------------
// Markers and boxes

std::size_t Marker::youngest() const {
    return static_cast<std::size_t>(std::min_element(depths.begin(), depths.end()) - depths.begin());
}

Marker Marker::successor() const {
    Marker m = *this;
    ++m.depths[youngest()];
    return m;
}

int Marker::total() const {
    int t = 0;
    for (int d : depths) t += d;
    return t;
}

std::string lineage_string(const std::vector<Split>& lineage) {
    std::ostringstream os;
    for (std::size_t k = 0; k < lineage.size(); ++k)
        os << (k ? " " : "") << (lineage[k].right ? 'R' : 'L') << lineage[k].axis + 1;
    return os.str();
}

MarkedBox initial_box(const Polynomial& p) { return {DenseBoxPoly(p), Marker(p.nvars()), {}}; }

std::pair<MarkedBox, MarkedBox> subdivide(const MarkedBox& box) {
    const std::size_t j = box.marker.youngest();
    const Marker next = box.marker.successor();
    MarkedBox left{box.poly.dilated(j), next, box.lineage};
    left.lineage.push_back({j, false});
    MarkedBox right{box.poly.reflected(j).dilated(j), next, box.lineage};
    right.lineage.push_back({j, true});
    return {std::move(left), std::move(right)};
}

std::vector<Rational> lineage_corner(const std::vector<Split>& lineage, std::size_t nvars) {
    // Original coordinate u = offset + scale * x for the current box.
    std::vector<Rational> offset(nvars, Rational(0));
    std::vector<Rational> scale(nvars, Rational(1));
    for (const auto& s : lineage) {
        if (s.right) offset[s.axis] += scale[s.axis];
        scale[s.axis] /= s.right ? -2 : 2;
    }
    return offset;
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Nonnegative: return "Nonnegative";
        case CertificateStatus::NegativeWitness: return "NegativeWitness";
        case CertificateStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Certifier

namespace {

void check_degree_cap(const Polynomial& p, int cap) {
    auto env = p.degree_envelope();
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (env[i] > cap)
            throw std::invalid_argument("variable x" + std::to_string(i + 1) + " has degree " +
                                        std::to_string(env[i]) + " above the cap " + std::to_string(cap));
}

void fill_witness(Certificate& cert, const Polynomial& p, const MarkedBox& box) {
    cert.status = CertificateStatus::NegativeWitness;
    cert.witness_lineage = box.lineage;
    cert.witness_corner = lineage_corner(box.lineage, p.nvars());
    cert.witness_value = p.evaluate(std::span<const Rational>(cert.witness_corner));
}

Certificate certify_sequential(const Polynomial& p, const CertifyOptions& opt) {
    Certificate cert;
    cert.splits_per_coordinate.assign(p.nvars(), 0);
    std::vector<MarkedBox> list;
    list.push_back(initial_box(p));
    cert.max_terms = list.back().poly.nonzero_terms();
    while (!list.empty()) {
        if (cert.steps >= opt.budget) {
            cert.status = CertificateStatus::BudgetExhausted;
            return cert;
        }
        MarkedBox box = std::move(list.back());
        list.pop_back();
        ++cert.steps;
        cert.max_depth = std::max(cert.max_depth, box.depth());
        if (sgn(box.poly.constant_term()) < 0) {
            cert.trace += 'N';
            fill_witness(cert, p, box);
            return cert;
        }
        ++cert.wpd_tests;
        if (box.poly.is_wpd()) {
            ++cert.leaves;
            cert.trace += 'W';
            continue;
        }
        cert.trace += 'S';
        ++cert.subdivisions;
        ++cert.splits_per_coordinate[box.marker.youngest()];
        auto [left, right] = subdivide(box);
        list.push_back(std::move(left));
        list.push_back(std::move(right));
    }
    cert.status = CertificateStatus::Nonnegative;
    return cert;
}

Certificate certify_parallel(const Polynomial& p, const CertifyOptions& opt) {
    Certificate cert;
    cert.parallel = true;
    cert.splits_per_coordinate.assign(p.nvars(), 0);

    std::mutex mu;
    std::condition_variable cv;
    std::vector<MarkedBox> work;
    work.push_back(initial_box(p));
    cert.max_terms = work.back().poly.nonzero_terms();
    std::size_t active = 0;
    bool halt = false;
    std::optional<MarkedBox> witness;

    auto worker = [&] {
        for (;;) {
            MarkedBox box;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return halt || !work.empty() || active == 0; });
                if (halt || (work.empty() && active == 0)) return;
                if (cert.steps >= opt.budget) {
                    halt = true;
                    cv.notify_all();
                    return;
                }
                box = std::move(work.back());
                work.pop_back();
                ++active;
                ++cert.steps;
                cert.max_depth = std::max(cert.max_depth, box.depth());
            }
            const bool negative = sgn(box.poly.constant_term()) < 0;
            const bool wpd = !negative && box.poly.is_wpd();
            std::optional<std::pair<MarkedBox, MarkedBox>> children;
            if (!negative && !wpd) children = subdivide(box);
            {
                std::lock_guard lock(mu);
                --active;
                if (negative) {
                    if (!witness) witness = std::move(box);
                    halt = true;
                } else {
                    ++cert.wpd_tests;
                    if (wpd) {
                        ++cert.leaves;
                    } else {
                        ++cert.subdivisions;
                        ++cert.splits_per_coordinate[children->first.lineage.back().axis];
                        work.push_back(std::move(children->first));
                        work.push_back(std::move(children->second));
                    }
                }
            }
            cv.notify_all();
        }
    };

    unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (witness) fill_witness(cert, p, *witness);
    else if (!work.empty() || cert.steps >= opt.budget && active != 0) cert.status = CertificateStatus::BudgetExhausted;
    else cert.status = CertificateStatus::Nonnegative;
    return cert;
}

}  // namespace

Certificate certify(const Polynomial& p, const CertifyOptions& options) {
    check_degree_cap(p, options.degree_cap);
    return options.parallel ? certify_parallel(p, options) : certify_sequential(p, options);
}

bool replay(const Polynomial& p, const Certificate& cert) {
    if (cert.parallel || cert.status != CertificateStatus::Nonnegative) return false;
    std::vector<MarkedBox> list;
    list.push_back(initial_box(p));
    for (char c : cert.trace) {
        if (list.empty()) return false;
        MarkedBox box = std::move(list.back());
        list.pop_back();
        if (sgn(box.poly.constant_term()) < 0) return false;
        const bool wpd = box.poly.is_wpd();
        if (c == 'W') {
            if (!wpd) return false;
        } else if (c == 'S') {
            if (wpd) return false;
            auto [left, right] = subdivide(box);
            list.push_back(std::move(left));
            list.push_back(std::move(right));
        } else {
            return false;
        }
    }
    return list.empty() && cert.trace.size() == cert.steps;
}

}  // namespace cmcert
