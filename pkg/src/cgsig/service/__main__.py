"""Run the service: python -m cgsig.service [--host HOST] [--port PORT]."""

import argparse

import uvicorn


def main():
    parser = argparse.ArgumentParser(prog="cgsig.service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run("cgsig.service.app:app", host=args.host, port=args.port)


if __name__ == "__main__":
    main()
