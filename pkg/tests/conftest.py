"""Shared fixtures: the built-in instances, built once per session.

All of these are read-only after construction (memo caches aside), so the
session scope is safe and keeps the suite fast.
"""

from __future__ import annotations

import pytest

from frobcat.instances import (
    bool_bad_f2_instance,
    bool_identity_instance,
    bool_linear_instance,
    bool_relabel_instance,
    build_bool_matrix,
    build_discrete_group,
    build_posetal_nat,
    cyclic_context,
    posetal_linear,
    z4_shift_instance,
    z4_to_z2_instance,
    z4z2_linear_instance,
    z_identity_instance,
    z_linear_identity_instance,
)


@pytest.fixture(scope="session")
def chain6():
    return build_posetal_nat(6)


@pytest.fixture(scope="session")
def z4_cat():
    return build_discrete_group(4)


@pytest.fixture(scope="session")
def z4_ctx():
    return cyclic_context(4)


@pytest.fixture(scope="session")
def bool2():
    return build_bool_matrix(2)


@pytest.fixture(scope="session")
def z4_identity():
    return z_identity_instance(4)


@pytest.fixture(scope="session")
def z2_identity():
    return z_identity_instance(2)


@pytest.fixture(scope="session")
def z4_to_z2():
    return z4_to_z2_instance()


@pytest.fixture(scope="session")
def bool_identity():
    return bool_identity_instance(2)


@pytest.fixture(scope="session")
def bool_relabel():
    return bool_relabel_instance(2)


@pytest.fixture(scope="session")
def z4_shift():
    return z4_shift_instance()


@pytest.fixture(scope="session")
def bool_bad_f2():
    return bool_bad_f2_instance(2)


@pytest.fixture(scope="session")
def posetal_a():
    return posetal_linear(6, "A")


@pytest.fixture(scope="session")
def posetal_b():
    return posetal_linear(6, "B")


@pytest.fixture(scope="session")
def z4_linear_id():
    return z_linear_identity_instance(4)


@pytest.fixture(scope="session")
def z4z2_linear():
    return z4z2_linear_instance()


@pytest.fixture(scope="session")
def bool_linear():
    return bool_linear_instance(2)


@pytest.fixture(scope="session")
def positive_functor_instances(z4_identity, z2_identity, z4_to_z2, bool_identity, bool_relabel):
    return [z4_identity, z2_identity, z4_to_z2, bool_identity, bool_relabel]


@pytest.fixture(scope="session")
def fault_functor_instances(z4_shift, bool_bad_f2):
    return [z4_shift, bool_bad_f2]


@pytest.fixture(scope="session")
def autonomous_linear_instances(z4_linear_id, z4z2_linear, bool_linear):
    return [z4_linear_id, z4z2_linear, bool_linear]
