#include "carbon/registry.hpp"

#include "carbon/crypto.hpp"
#include "carbon/errors.hpp"

namespace carbon::registry {

namespace {

void check_insertable(const WorldState& state, const AccountRecord& record) {
    if (is_reserved_address(record.id)) fail(ErrorCode::ReservedAddress, record.id.hex());
    if (state.accounts.contains(record.id)) fail(ErrorCode::DuplicateAccount, record.id.hex());
    if (record.display_name.size() > kMaxDisplayNameBytes)
        fail(ErrorCode::NameTooLong, std::to_string(record.display_name.size()) + " bytes");
}

}  // namespace

AccountRecord register_account(WorldState& state, Role role, ByteView public_key, std::string display_name,
                               Height at) {
    if (role == Role::Admin) fail(ErrorCode::Unauthorized, "admin is fixed at genesis");
    AccountRecord record;
    record.id = derive_address(public_key);
    record.role = role;
    record.public_key.assign(public_key.begin(), public_key.end());
    record.display_name = std::move(display_name);
    record.accredited = false;
    record.registered_at = at;
    check_insertable(state, record);
    state.accounts.emplace(record.id, record);
    return record;
}

AccountRecord set_verifier_accreditation(WorldState& state, const Address& caller, const Address& target,
                                         bool accredited) {
    if (caller != state.admin) fail(ErrorCode::Unauthorized, "only the genesis admin accredits");
    auto it = state.accounts.find(target);
    if (it == state.accounts.end()) fail(ErrorCode::UnknownAccount, target.hex());
    if (it->second.role != Role::Verifier) fail(ErrorCode::RoleMismatch, "target is not a Verifier");
    it->second.accredited = accredited;
    return it->second;
}

const AccountRecord& lookup(const WorldState& state, const Address& id) {
    auto it = state.accounts.find(id);
    if (it == state.accounts.end()) fail(ErrorCode::UnknownAccount, id.hex());
    return it->second;
}

bool is_registered(const WorldState& state, const Address& id) { return state.accounts.contains(id); }

std::set<Address> accredited_verifiers(const WorldState& state) {
    std::set<Address> out;
    for (const auto& [addr, rec] : state.accounts)
        if (rec.role == Role::Verifier && rec.accredited) out.insert(addr);
    return out;
}

void insert_genesis_account(WorldState& state, AccountRecord record) {
    check_insertable(state, record);
    if (record.accredited && record.role != Role::Verifier)
        fail(ErrorCode::RoleMismatch, "only verifiers carry accreditation");
    state.accounts.emplace(record.id, std::move(record));
}

}  // namespace carbon::registry
