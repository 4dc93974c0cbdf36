# filename: app/main.py

import logging

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from app.core.config import PROJECT_NAME, PROJECT_VERSION, PROJECT_DESCRIPTION, API_V1_STR, LOG_LEVEL
from app.api.endpoints import check, construct, convert, mc

logging.basicConfig(level=LOG_LEVEL)

app = FastAPI(
    title=PROJECT_NAME,
    version=PROJECT_VERSION,
    description=PROJECT_DESCRIPTION,
    openapi_tags=[
        {"name": "Checks", "description": "Identity checks for every structure kind."},
        {"name": "Conversion", "description": "2-term difference A-infinity algebras <-> difference associative 2-algebras."},
        {"name": "Construction", "description": "Cocycles, crossed modules and semidirect products."},
        {"name": "Maurer-Cartan", "description": "Difference operators as Maurer-Cartan elements."},
    ]
)

origins = [
    "http://localhost:3000",
    "http://127.0.0.1:3000",
]

app.add_middleware(
    CORSMiddleware,
    allow_origins=origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(check.router, prefix=API_V1_STR, tags=["Checks"])
app.include_router(convert.router, prefix=API_V1_STR, tags=["Conversion"])
app.include_router(construct.router, prefix=API_V1_STR, tags=["Construction"])
app.include_router(mc.router, prefix=API_V1_STR, tags=["Maurer-Cartan"])

@app.get("/", tags=["Root"])
async def read_root():
    """A simple root endpoint to confirm the API is running."""
    return {"message": f"Welcome to the {PROJECT_NAME}!"}
