#pragma once

#include <set>
#include <string>

#include "carbon/state.hpp"

/// On-ledger records for verifiers, credit holders and customers.
namespace carbon::registry {

/// Permissionless registration; the address is SHA-256(public_key).
/// Throws DuplicateAccount, NameTooLong, ReservedAddress, or Unauthorized
/// (for Role::Admin, which only genesis may create).
AccountRecord register_account(WorldState& state, Role role, ByteView public_key, std::string display_name,
                               Height at);

/// Admin-only. Throws Unauthorized, UnknownAccount, RoleMismatch.
AccountRecord set_verifier_accreditation(WorldState& state, const Address& caller, const Address& target,
                                         bool accredited);

/// Throws UnknownAccount (always for the burn sink).
const AccountRecord& lookup(const WorldState& state, const Address& id);

bool is_registered(const WorldState& state, const Address& id);

std::set<Address> accredited_verifiers(const WorldState& state);

/// Genesis-time insert: skips the permissionless checks on role but still
/// enforces uniqueness and the reserved-address rule.
void insert_genesis_account(WorldState& state, AccountRecord record);

}  // namespace carbon::registry
