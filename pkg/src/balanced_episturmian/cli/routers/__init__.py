"""CLI routers for the application."""

from balanced_episturmian.cli.routers.analysis import router as analysis_router
from balanced_episturmian.cli.routers.classification import (
    router as classification_router,
)
from balanced_episturmian.cli.routers.construction import router as construction_router
from balanced_episturmian.cli.routers.verification import router as verification_router

__all__ = [
    "analysis_router",
    "classification_router",
    "construction_router",
    "verification_router",
]
