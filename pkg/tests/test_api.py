# filename: tests/test_api.py

import pytest
from fastapi.testclient import TestClient

from app.core.config import API_V1_STR, PROJECT_NAME
from app.main import app
from utils.codec import encode
from utils.diffalg import DifferenceAlgebra
from utils.exactlin import identity
from utils.genkit import rationals
from utils.twoalg import functor_T


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def _body(obj) -> dict:
    return encode(obj).model_dump(mode="json")


def _identity_on_q() -> dict:
    alg = rationals().algebra
    return _body(DifferenceAlgebra(alg=alg, d=identity(alg.space)))


def test_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json() == {"message": f"Welcome to the {PROJECT_NAME}!"}


def test_check(client, skeletal):
    response = client.post(f"{API_V1_STR}/check", json=_body(skeletal))
    assert response.status_code == 200
    assert response.json()["ok"] is True

    response = client.post(f"{API_V1_STR}/check", json=_identity_on_q())
    assert response.status_code == 200
    report = response.json()
    assert report["ok"] is False
    assert report["violations"][0]["tag"] == "(Eq1)"


def test_check_rejects_bad_files(client, q_da):
    body = _body(q_da)
    body["maps"]["d"]["entries"] = [[[0, 5], "1"]]
    assert client.post(f"{API_V1_STR}/check", json=body).status_code == 422

    body["maps"]["d"]["entries"] = [[[0, 0], "0.5"]]
    assert client.post(f"{API_V1_STR}/check", json=body).status_code == 422


def test_convert(client, strict):
    response = client.post(f"{API_V1_STR}/convert", params={"target": "2alg"}, json=_body(strict))
    assert response.status_code == 200
    data = response.json()
    assert data["relation"] == "identical"
    assert data["file"]["kind"] == "diffass2"

    back = client.post(f"{API_V1_STR}/convert", params={"target": "ainf"}, json=data["file"])
    assert back.status_code == 200
    assert back.json()["file"] == _body(strict)


def test_convert_wrong_kind(client, strict):
    response = client.post(f"{API_V1_STR}/convert", params={"target": "ainf"}, json=_body(strict))
    assert response.status_code == 422
    response = client.post(f"{API_V1_STR}/convert", params={"target": "2alg"}, json=_body(functor_T(strict)))
    assert response.status_code == 422
    response = client.post(f"{API_V1_STR}/convert", params={"target": "lie"}, json=_body(strict))
    assert response.status_code == 422


def test_construct(client, strict, skeletal):
    response = client.post(f"{API_V1_STR}/construct/to-crossed-module", json=_body(strict))
    assert response.status_code == 200
    assert response.json()["kind"] == "crossed_module"

    response = client.post(f"{API_V1_STR}/construct/to-cocycle", json=_body(strict))
    assert response.status_code == 400
    assert "detail" in response.json()

    response = client.post(f"{API_V1_STR}/construct/to-cocycle", json=_body(skeletal))
    assert response.status_code == 200
    assert response.json()["params"] == {"degree": 3}

    assert client.post(f"{API_V1_STR}/construct/unknown", json=_body(strict)).status_code == 404


def test_mc(client, q_da):
    response = client.post(f"{API_V1_STR}/mc", json=_body(q_da))
    assert response.status_code == 200
    assert response.json()["agree"] is True
    assert response.json()["maurer_cartan"] is True

    response = client.post(f"{API_V1_STR}/mc", json=_identity_on_q())
    assert response.status_code == 200
    assert response.json()["maurer_cartan"] is False

    assert client.post(f"{API_V1_STR}/mc", json=_body(rationals().algebra)).status_code == 422
