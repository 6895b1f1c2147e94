#include "spbox/protocol.hpp"

#include <nlohmann/json.hpp>

#include <ostream>

namespace spbox {

RoundTranscript run_round(const SpParameter& p, const UnitVector& a_setting,
                          const UnitVector& b_setting, Rng& rng, const RoundOptions& opts) {
    const HiddenVariablePair hidden = sample_hidden_pair(rng);
    const int x = alice_input(a_setting, hidden);
    const int y = bob_input(b_setting, hidden);
    const BoxOutputs ab = sample_sp_box(p, x, y, rng);
    const int v_a = alice_output(ab.a, a_setting, hidden);
    int v_b = bob_output(ab.b, b_setting, hidden);
    if (opts.drop_bob_inversion) v_b ^= 1;
    return {hidden, a_setting, b_setting, x, y, ab.a, ab.b, v_a, v_b};
}

namespace {

nlohmann::json vec_json(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

}  // namespace

std::string transcript_jsonl(const RoundTranscript& t) {
    nlohmann::json j{
        {"lambda1", vec_json(t.hidden.lambda1.vec())},
        {"lambda2", vec_json(t.hidden.lambda2.vec())},
        {"A", vec_json(t.a_setting.vec())},
        {"B", vec_json(t.b_setting.vec())},
        {"x", t.x},
        {"y", t.y},
        {"a", t.a},
        {"b", t.b},
        {"vA", t.v_a},
        {"vB", t.v_b},
    };
    return j.dump();
}

void append_transcript_jsonl(std::ostream& os, const RoundTranscript& t) {
    os << transcript_jsonl(t) << '\n';
}

}  // namespace spbox
