#pragma once

#include <cstdint>
#include <tuple>

#include "cardsim/dates.hpp"

namespace cardsim {

enum class Channel : uint8_t { Chip = 0, Swipe = 1, Online = 2, Cash = 3 };

const char* channel_name(Channel c);  // CHIP / SWIPE / ONLINE / CASH

constexpr uint32_t kOnlineLocation = 0xffffffffu;
constexpr uint64_t kCashInstrument = 0;

// One purchase, pre-serialization. seq breaks timestamp ties deterministically
// within a consumer's stream (fraud generators use disjoint seq ranges).
struct TransactionEvent {
    DateTime timestamp;
    uint32_t consumer_id = 0;
    uint32_t seq = 0;
    uint64_t card_id = kCashInstrument;  // 0 = cash
    int64_t amount_cents = 0;
    uint16_t gs_id = 0;
    Channel channel = Channel::Swipe;
    bool is_fraud = false;
    uint32_t location_id = kOnlineLocation;  // kOnlineLocation = online purchase
    uint32_t merchant_id = 0;
    uint32_t fraudster_id = 0;  // 0 = none (mechanism-2 fraud stays 0)
};

// Deterministic global ordering: timestamp, then consumer, then seq, then
// full content so equal keys cannot depend on input order.
inline bool event_order(const TransactionEvent& a, const TransactionEvent& b) {
    auto key = [](const TransactionEvent& e) {
        return std::tuple(e.timestamp.minutes, e.consumer_id, e.seq, e.card_id, e.amount_cents,
                          e.gs_id, e.merchant_id, e.location_id, static_cast<uint8_t>(e.channel),
                          e.fraudster_id);
    };
    return key(a) < key(b);
}

}  // namespace cardsim
