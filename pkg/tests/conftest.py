import pytest

from digitop import homotopy, kernels
from digitop.homotopy import check_certificate

AUDIT = {"checked": 0, "certificates": 0, "failures": []}


def _audit(verdict):
    if not verdict.yes:
        return
    AUDIT["checked"] += 1
    for cert in verdict.certificates:
        AUDIT["certificates"] += 1
        problems = check_certificate(cert)
        if problems:
            AUDIT["failures"].append(problems)
            raise AssertionError(f"certificate failed independent check: {problems}")


@pytest.fixture(autouse=True, scope="session")
def certificate_audit():
    homotopy.audit_hooks.append(_audit)
    yield AUDIT
    homotopy.audit_hooks.remove(_audit)
    assert not AUDIT["failures"]


@pytest.fixture(params=kernels.available_backends())
def backend(request, monkeypatch):
    """Run the test once per importable kernel backend."""
    if request.param == "python":
        monkeypatch.setattr(kernels, "compiled_backend", None)
    return request.param
