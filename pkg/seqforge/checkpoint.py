""" Checkpoint files for long tag-system runs """
import base64
import hashlib
import json
import logging
from pathlib import Path

from seqforge.exceptions import CheckpointError
from seqforge.tag_system import TagRun, TagStatus, TagWord

logger = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1


def _encode(word):
    w = TagWord(word)
    binary = not (set(word) - {'0', '1'})
    return {
        'length': len(word),
        'binary': binary,
        'data': base64.b64encode(w.pack()).decode('ascii'),
    }


def _decode(entry):
    data = base64.b64decode(entry['data'])
    return TagWord.unpack(data, entry['length'], entry['binary']).symbols


class TagCheckpoint(object):
    """ A saved TagRun: a JSON header carrying the format version, the rules
        fingerprint and the run counters, with the words bit-packed
    """

    def __init__(self, path):
        self._path = Path(path)

    @property
    def exists(self):
        return self._path.exists()

    @property
    def path(self):
        return self._path

    def save(self, run):
        meta = {
            'version': CHECKPOINT_VERSION,
            'rules': run.rules.fingerprint,
            'steps': run.steps,
            'longest': run.longest,
            'power': run.power,
            'lam': run.lam,
            'status': run.status.value,
            'word': _encode(run.word),
            'tortoise': _encode(run.tortoise),
        }
        body = json.dumps(meta, sort_keys=True)
        meta['digest'] = hashlib.sha256(body.encode('ascii')).hexdigest()

        self._path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self._path.with_name(self._path.name + '.tmp')
        logger.debug('Saving checkpoint {} at step {}'.format(self._path, run.steps))
        with open(tmp, 'w') as outfile:
            json.dump(meta, outfile)
        tmp.replace(self._path)

    def load(self, rules):
        try:
            with open(self._path, 'r') as f:
                meta = json.load(f)
        except FileNotFoundError:
            raise CheckpointError('No checkpoint at {}'.format(self._path))
        except ValueError as e:
            raise CheckpointError('Checkpoint {} is not readable: {}'.format(self._path, e))

        if meta.get('version') != CHECKPOINT_VERSION:
            raise CheckpointError('Checkpoint version {} is not supported (expected {})'.format(
                meta.get('version'), CHECKPOINT_VERSION))

        digest = meta.pop('digest', None)
        body = json.dumps(meta, sort_keys=True)
        if digest != hashlib.sha256(body.encode('ascii')).hexdigest():
            raise CheckpointError('Checkpoint {} is corrupt'.format(self._path))

        if meta['rules'] != rules.fingerprint:
            raise CheckpointError('Checkpoint {} was written for different rules'.format(self._path))

        logger.debug('Loaded checkpoint {} at step {}'.format(self._path, meta['steps']))
        return TagRun(rules, _decode(meta['word']),
                      steps=meta['steps'],
                      longest=meta['longest'],
                      tortoise=_decode(meta['tortoise']),
                      power=meta['power'],
                      lam=meta['lam'],
                      status=TagStatus(meta['status']))


def run_resumable(word, rules, path, max_steps, checkpoint_every):
    """ Continue the run saved at ``path`` (or start one from ``word``) until it
        resolves or reaches max_steps, writing a checkpoint at the first pass
        boundary past every multiple of checkpoint_every steps and at the end
    """
    if checkpoint_every < 1:
        raise ValueError('checkpoint_every must be positive')

    checkpoint = TagCheckpoint(path)
    if checkpoint.exists:
        run = checkpoint.load(rules)
        logger.info('Resuming from step {}'.format(run.steps))
    else:
        run = TagRun(rules, word.symbols if isinstance(word, TagWord) else str(word))

    state = {'next': (run.steps // checkpoint_every + 1) * checkpoint_every}

    def on_boundary(current):
        if current.steps >= state['next']:
            checkpoint.save(current)
            state['next'] = (current.steps // checkpoint_every + 1) * checkpoint_every

    run.advance(max_steps, on_boundary)
    checkpoint.save(run)
    logger.info('Run at step {}: {}'.format(run.steps, run.status.value))
    return run
