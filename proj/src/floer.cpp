#include "rholat/floer.hpp"


namespace rholat {

std::vector<FloerRecord> floer_records(const BrieskornSphere& s, const SeifertData& seifert,
                                       const std::vector<RotationNumbers>& reps, Execution exec,
                                       int jobs, double tolerance)
{
    std::vector<FloerRecord> out(reps.size());
    for_each_index(reps.size(), exec, jobs,
                   [&](std::size_t i) { out[i] = floer_record(s, seifert, reps[i], tolerance); });
    return out;
}

GradedRanks<8> instanton_ranks(const std::vector<FloerRecord>& records)
{
    GradedRanks<8> r;
    for (const auto& rec : records)
        ++r.ranks[static_cast<std::size_t>(rec.gr_mod8)];
    return r;
}

GradedRanks<8> instanton_ranks(const BrieskornSphere& s)
{
    return instanton_ranks(floer_records(s, solve_seifert(s), enumerate_reps(s)));
}

GradedRanks<4> ic_natural_ranks(std::int64_t signature, const std::vector<FloerRecord>& records)
{
    GradedRanks<4> r;
    r.ranks[static_cast<std::size_t>(mod_floor(signature, 4))] += 1;
    for (const auto& rec : records) {
        r.ranks[static_cast<std::size_t>(rec.mu_mod4)] += 2;
        r.ranks[static_cast<std::size_t>((rec.mu_mod4 + 1) % 4)] += 2;
    }
    return r;
}

GradedRanks<4> ic_natural_ranks(std::int64_t p, std::int64_t q)
{
    const BrieskornSphere s = BrieskornSphere::make(p, q);
    return ic_natural_ranks(torus_signature(p, q),
                            floer_records(s, solve_seifert(s), enumerate_reps(s)));
}

FloerReport floer_report(const BrieskornSphere& s, Execution exec, int jobs, double tolerance)
{
    FloerReport r{s, solve_seifert(s), {}, {}, 0, 0, {}};
    r.records = floer_records(s, r.seifert, enumerate_reps(s), exec, jobs, tolerance);
    r.instanton = instanton_ranks(r.records);
    r.signature = torus_signature(s.p, s.q);
    r.signature_mod4 = static_cast<int>(mod_floor(r.signature, 4));
    r.ic_natural = ic_natural_ranks(r.signature, r.records);
    return r;
}

} // namespace rholat
