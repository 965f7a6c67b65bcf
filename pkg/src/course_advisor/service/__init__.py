"""HTTP service layer (FastAPI) over the core package."""
