#pragma once

// Mapping between ledger records and canonical values. Snapshot top-level
// keys: registry, nonces, token, submissions, burns, certificates,
// proposals, pool, lp_shares, counters, quorum, chain_id.

#include "carbon/canonical.hpp"
#include "carbon/state.hpp"

namespace carbon::codec {

Value encode(const Address& a);
Value encode(const Hash32& h);
Address decode_address(const Value& v);
Hash32 decode_hash(const Value& v);

Value encode(const AccountRecord& r);
AccountRecord decode_account(const Value& v);

Value encode(const WorldState& s);

/// Throws LedgerError(ParseError) on any schema violation.
WorldState decode_state(const Value& v);

}  // namespace carbon::codec
